// Monomials as dense exponent vectors of fixed length n, and the two
// monomial orders used throughout (lex and graded lex, both with the
// variable precedence x1 > x2 > ... > xn).
#pragma once

#include <string>
#include <vector>

namespace hessideals {

class Monomial {
 public:
  // The monomial 1 in an ambient ring of nvars variables.
  explicit Monomial(int nvars);
  // From explicit exponents (exps[k] belongs to x_{k+1}).
  explicit Monomial(std::vector<int> exps);
  // x_var^power; var is 1-based.
  static Monomial variable(int var, int nvars, int power = 1);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int total_degree() const { return total_; }
  const std::vector<int>& exponents() const { return exps_; }
  int exponent(int var) const;  // 1-based
  bool is_one() const { return total_ == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;      // this | other
  Monomial divided_by(const Monomial& other) const;  // this / other; pre: other | this
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

  // "x1^2*x3"; "1" for the empty monomial.
  std::string to_string() const;

 private:
  std::vector<int> exps_;
  int total_;
};

enum class MonomialOrder { Lex, GrLex };

// Three-way comparison of a and b under ord: negative, zero, positive.
int compare(const Monomial& a, const Monomial& b, MonomialOrder ord);

inline bool order_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  return compare(a, b, ord) < 0;
}
inline bool order_greater(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  return compare(a, b, ord) > 0;
}

// Comparator placing lex-larger monomials first; the canonical key order of
// polynomial term maps (so begin() is the lex leading term).
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exponents() > b.exponents();
  }
};

bool coprime(const Monomial& a, const Monomial& b);

std::string order_name(MonomialOrder ord);              // "lex" / "grlex"
MonomialOrder order_from_name(const std::string& name);  // throws on unknown name

}  // namespace hessideals
