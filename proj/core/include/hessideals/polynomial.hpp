// Sparse multivariate polynomials over the rationals in canonical form
// (term map keyed lex-descending, no zero coefficients), plus the
// multivariate division algorithm with deterministic first-divisor
// tie-breaking.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hessideals/monomial.hpp"
#include "hessideals/rational.hpp"

namespace hessideals {

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, LexGreater>;

  // The zero polynomial in nvars variables.
  explicit Polynomial(int nvars);

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(const Rational& c, int nvars);
  static Polynomial one(int nvars) { return constant(1, nvars); }
  static Polynomial term(const Rational& c, const Monomial& m);
  static Polynomial variable(int var, int nvars);  // x_var, 1-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;  // 0 when absent

  // Accumulates c * m, erasing the term if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);
  // In-place f -= c * m * g; the inner step of division.
  void sub_mul(const Rational& c, const Monomial& m, const Polynomial& g);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }
  // Arbitrary-but-deterministic total order, for canonical polynomial sets.
  bool operator<(const Polynomial& other) const;

  int degree() const;  // total degree; -1 for the zero polynomial
  bool is_homogeneous() const;  // zero counts as homogeneous

  // Leading data under ord; throws std::domain_error on the zero polynomial.
  std::pair<Rational, Monomial> leading_term(MonomialOrder ord) const;
  Monomial leading_monomial(MonomialOrder ord) const;
  Rational leading_coefficient(MonomialOrder ord) const;
  Polynomial monic(MonomialOrder ord) const;

  // Value at x1 = ... = xn = 1.
  Rational coefficient_sum() const;

  // Text form: terms joined by " + " / " - ", coefficients and exponents
  // elided when 1 ("x1*x2 + x3^2", "3/2*x1 - x2", "0").
  std::string to_string() const;
  // Inverse of to_string; accepts arbitrary whitespace. Throws
  // std::invalid_argument naming the offending position.
  static Polynomial parse(const std::string& text, int nvars);

 private:
  int nvars_;
  TermMap terms_;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division: f = sum(quotients[i] * divisors[i]) + remainder,
// no remainder monomial divisible by any divisor's leading monomial.
// Always reduces by the first divisor whose leading monomial divides.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      MonomialOrder ord);

// Remainder of the same division, without quotient bookkeeping.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                  MonomialOrder ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder ord);

}  // namespace hessideals
