#include "hessideals/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hessideals {

Monomial::Monomial(int nvars) : exps_(static_cast<size_t>(nvars), 0), total_(0) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)), total_(0) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    total_ += e;
  }
}

Monomial Monomial::variable(int var, int nvars, int power) {
  if (var < 1 || var > nvars)
    throw std::invalid_argument("variable index " + std::to_string(var) +
                                " outside [1, " + std::to_string(nvars) + "]");
  if (power < 0) throw std::invalid_argument("negative exponent");
  Monomial m(nvars);
  m.exps_[static_cast<size_t>(var - 1)] = power;
  m.total_ = power;
  return m;
}

int Monomial::exponent(int var) const {
  if (var < 1 || var > nvars())
    throw std::invalid_argument("variable index " + std::to_string(var) +
                                " outside [1, " + std::to_string(nvars()) + "]");
  return exps_[static_cast<size_t>(var - 1)];
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) throw std::invalid_argument("ambient mismatch");
  Monomial r = *this;
  for (size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += other.exps_[k];
  r.total_ = total_ + other.total_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw std::invalid_argument("ambient mismatch");
  for (size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial quotient undefined");
  Monomial r = *this;
  for (size_t k = 0; k < exps_.size(); ++k) r.exps_[k] -= other.exps_[k];
  r.total_ = total_ - other.total_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("ambient mismatch");
  Monomial r = a;
  r.total_ = 0;
  for (size_t k = 0; k < r.exps_.size(); ++k) {
    r.exps_[k] = std::max(a.exps_[k], b.exps_[k]);
    r.total_ += r.exps_[k];
  }
  return r;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string s;
  for (int k = 0; k < nvars(); ++k) {
    int e = exps_[static_cast<size_t>(k)];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(k + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("ambient mismatch");
  if (ord == MonomialOrder::GrLex) {
    if (a.total_degree() != b.total_degree())
      return a.total_degree() < b.total_degree() ? -1 : 1;
  }
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (size_t k = 0; k < ea.size(); ++k)
    if (ea[k] != eb[k]) return ea[k] < eb[k] ? -1 : 1;
  return 0;
}

bool coprime(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("ambient mismatch");
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (size_t k = 0; k < ea.size(); ++k)
    if (ea[k] > 0 && eb[k] > 0) return false;
  return true;
}

std::string order_name(MonomialOrder ord) {
  return ord == MonomialOrder::Lex ? "lex" : "grlex";
}

MonomialOrder order_from_name(const std::string& name) {
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "grlex") return MonomialOrder::GrLex;
  throw std::invalid_argument("unknown monomial order '" + name + "' (expected lex or grlex)");
}

}  // namespace hessideals
