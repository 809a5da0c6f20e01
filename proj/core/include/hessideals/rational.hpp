// Exact arbitrary-precision rational and integer arithmetic, backed by GMP.
#pragma once

#include <gmpxx.h>

#include <string>

namespace hessideals {

using Rational = mpq_class;
using BigInt = mpz_class;

// Canonicalized fraction num/den.
inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "p/q" with q elided when 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

// Parses "p" or "p/q" (optional sign). Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

}  // namespace hessideals
