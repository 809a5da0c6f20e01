#include "hessideals/rational.hpp"

#include <stdexcept>

namespace hessideals {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, text.c_str(), 10) != 0) {
    mpq_clear(q);
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
  Rational r(q);
  mpq_clear(q);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace hessideals
