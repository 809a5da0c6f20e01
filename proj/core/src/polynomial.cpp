#include "hessideals/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace hessideals {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

Polynomial Polynomial::constant(const Rational& c, int nvars) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(int var, int nvars) {
  return term(1, Monomial::variable(var, nvars));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("ambient mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) {
  if (g.nvars_ != nvars_ || m.nvars() != nvars_)
    throw std::invalid_argument("ambient mismatch");
  for (const auto& [mg, cg] : g.terms_) add_term(m * mg, -c * cg);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("ambient mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("ambient mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  r -= other;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("ambient mismatch");
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r = *this;
  r *= c;
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

bool Polynomial::operator<(const Polynomial& other) const {
  if (nvars_ != other.nvars_) return nvars_ < other.nvars_;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end() && b != other.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first.exponents() < b->first.exponents();
    int c = cmp(a->second, b->second);
    if (c != 0) return c < 0;
  }
  return a == terms_.end() && b != other.terms_.end();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_)
    if (m.total_degree() != d) return false;
  return true;
}

std::pair<Rational, Monomial> Polynomial::leading_term(MonomialOrder ord) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  if (ord == MonomialOrder::Lex) {
    const auto& [m, c] = *terms_.begin();
    return {c, m};
  }
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order_greater(it->first, best->first, ord)) best = it;
  return {best->second, best->first};
}

Monomial Polynomial::leading_monomial(MonomialOrder ord) const {
  return leading_term(ord).second;
}

Rational Polynomial::leading_coefficient(MonomialOrder ord) const {
  return leading_term(ord).first;
}

Polynomial Polynomial::monic(MonomialOrder ord) const {
  Rational lc = leading_coefficient(ord);
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v /= lc;
  return r;
}

Rational Polynomial::coefficient_sum() const {
  Rational s(0);
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_one()) {
      out += hessideals::to_string(mag);
    } else if (mag == 1) {
      out += m.to_string();
    } else {
      out += hessideals::to_string(mag) + "*" + m.to_string();
    }
  }
  return out;
}

namespace {

struct PolyParser {
  const std::string& s;
  int nvars;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  std::string digits() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected digits");
    size_t start = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }

  int small_int(const std::string& what, long max) {
    std::string d = digits();
    if (d.size() > 9) fail(what + " out of range");
    long v = std::stol(d);
    if (v > max) fail(what + " out of range");
    return static_cast<int>(v);
  }

  Rational number() {
    BigInt num(digits());
    skip_ws();
    if (!eof() && peek() == '/') {
      ++pos;
      skip_ws();
      BigInt den(digits());
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  // One product of numeric and variable factors.
  std::pair<Rational, Monomial> term() {
    Rational coeff(1);
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= number();
      } else if (!eof() && peek() == 'x') {
        ++pos;
        int var = small_int("variable index", nvars);
        if (var < 1) fail("variable index out of range");
        int e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
          ++pos;
          skip_ws();
          e = small_int("exponent", 100000);
        }
        exps[static_cast<size_t>(var - 1)] += e;
      } else {
        fail("expected a coefficient or variable factor");
      }
      any = true;
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {coeff, Monomial(std::move(exps))};
  }

  Polynomial run() {
    Polynomial p(nvars);
    skip_ws();
    if (eof()) fail("empty polynomial text");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos;
    }
    while (true) {
      auto [c, m] = term();
      p.add_term(m, sign * c);
      skip_ws();
      if (eof()) break;
      if (peek() == '+') {
        sign = 1;
      } else if (peek() == '-') {
        sign = -1;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos;
    }
    return p;
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars) {
  PolyParser parser{text, nvars};
  return parser.run();
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      MonomialOrder ord) {
  const int n = f.nvars();
  std::vector<std::pair<Rational, Monomial>> leads;
  leads.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.nvars() != n) throw std::invalid_argument("ambient mismatch");
    if (d.is_zero()) throw std::invalid_argument("zero divisor");
    leads.push_back(d.leading_term(ord));
  }
  DivisionResult res{std::vector<Polynomial>(divisors.size(), Polynomial(n)), Polynomial(n)};
  Polynomial p = f;
  while (!p.is_zero()) {
    auto [c, m] = p.leading_term(ord);
    bool hit = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (leads[i].second.divides(m)) {
        Rational tc = c / leads[i].first;
        Monomial tm = m.divided_by(leads[i].second);
        res.quotients[i].add_term(tm, tc);
        p.sub_mul(tc, tm, divisors[i]);
        hit = true;
        break;
      }
    }
    if (!hit) {
      res.remainder.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return res;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                  MonomialOrder ord) {
  const int n = f.nvars();
  std::vector<std::pair<Rational, Monomial>> leads;
  leads.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.nvars() != n) throw std::invalid_argument("ambient mismatch");
    if (d.is_zero()) throw std::invalid_argument("zero divisor");
    leads.push_back(d.leading_term(ord));
  }
  Polynomial remainder(n);
  Polynomial p = f;
  while (!p.is_zero()) {
    auto [c, m] = p.leading_term(ord);
    bool hit = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (leads[i].second.divides(m)) {
        p.sub_mul(c / leads[i].first, m.divided_by(leads[i].second), divisors[i]);
        hit = true;
        break;
      }
    }
    if (!hit) {
      remainder.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder ord) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("ambient mismatch");
  auto [cf, mf] = f.leading_term(ord);
  auto [cg, mg] = g.leading_term(ord);
  Monomial gamma = Monomial::lcm(mf, mg);
  Polynomial s(f.nvars());
  s.sub_mul(Rational(-1) / cf, gamma.divided_by(mf), f);
  s.sub_mul(Rational(1) / cg, gamma.divided_by(mg), g);
  return s;
}

}  // namespace hessideals
