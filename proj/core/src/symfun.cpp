#include "hessideals/symfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace hessideals {

VariableSet::VariableSet(std::initializer_list<int> idx)
    : VariableSet(std::vector<int>(idx)) {}

VariableSet::VariableSet(std::vector<int> idx) : indices(std::move(idx)) {
  for (size_t k = 0; k + 1 < indices.size(); ++k)
    if (indices[k] >= indices[k + 1])
      throw std::invalid_argument("variable set indices must be strictly ascending");
  if (!indices.empty() && indices.front() < 1)
    throw std::invalid_argument("variable set indices must be >= 1");
}

VariableSet VariableSet::range(int lo, int hi) {
  std::vector<int> idx;
  for (int v = lo; v <= hi; ++v) idx.push_back(v);
  return VariableSet(std::move(idx));
}

namespace {

void check_ambient(const VariableSet& S, int nvars) {
  if (!S.indices.empty() && S.indices.back() > nvars)
    throw std::invalid_argument("variable set index " + std::to_string(S.indices.back()) +
                                " exceeds ambient count " + std::to_string(nvars));
}

}  // namespace

Polynomial elementary_truncated(int d, const VariableSet& S, int nvars) {
  check_ambient(S, nvars);
  if (d == 0) return Polynomial::one(nvars);
  if (d < 0 || d > S.size()) return Polynomial::zero(nvars);
  Polynomial p(nvars);
  // iterate all d-subsets of S via the usual combination odometer
  std::vector<int> pick(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) pick[static_cast<size_t>(k)] = k;
  while (true) {
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    for (int k : pick) exps[static_cast<size_t>(S.indices[static_cast<size_t>(k)] - 1)] = 1;
    p.add_term(Monomial(std::move(exps)), 1);
    int k = d - 1;
    while (k >= 0 && pick[static_cast<size_t>(k)] == S.size() - d + k) --k;
    if (k < 0) break;
    ++pick[static_cast<size_t>(k)];
    for (int j = k + 1; j < d; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return p;
}

Polynomial complete_truncated(int d, const VariableSet& S, int nvars) {
  check_ambient(S, nvars);
  if (d == 0) return Polynomial::one(nvars);
  if (d < 0 || S.empty()) return Polynomial::zero(nvars);
  Polynomial p(nvars);
  // iterate all d-multisets of S (combinations with repetition)
  std::vector<int> pick(static_cast<size_t>(d), 0);
  while (true) {
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    for (int k : pick) exps[static_cast<size_t>(S.indices[static_cast<size_t>(k)] - 1)] += 1;
    p.add_term(Monomial(std::move(exps)), 1);
    int k = d - 1;
    while (k >= 0 && pick[static_cast<size_t>(k)] == S.size() - 1) --k;
    if (k < 0) break;
    int v = pick[static_cast<size_t>(k)] + 1;
    for (int j = k; j < d; ++j) pick[static_cast<size_t>(j)] = v;
  }
  return p;
}

Polynomial elementary_full(int d, int nvars) {
  return elementary_truncated(d, VariableSet::range(1, nvars), nvars);
}

Polynomial elem_decomposition_rhs(int d, int r, int nvars) {
  if (r < 1 || r > nvars) throw std::invalid_argument("r outside [1, n]");
  Polynomial p = Polynomial::variable(r, nvars) *
                 elementary_truncated(d - 1, VariableSet::range(1, r - 1), nvars);
  p += elementary_truncated(d, VariableSet::range(1, r - 1), nvars);
  return p;
}

Polynomial complete_decomposition_rhs(int d, int r, int nvars) {
  if (r < 1 || r > nvars) throw std::invalid_argument("r outside [1, n]");
  Polynomial p = Polynomial::variable(r, nvars) *
                 complete_truncated(d - 1, VariableSet::range(r, nvars), nvars);
  p += complete_truncated(d, VariableSet::range(r + 1, nvars), nvars);
  return p;
}

Polynomial elem_fixed_varset_expansion(int d, int r, int j, int nvars) {
  if (r < 1 || r > nvars) throw std::invalid_argument("r outside [1, n]");
  if (j < 0 || j > r) throw std::invalid_argument("j outside [0, r]");
  Polynomial p(nvars);
  for (int t = 0; t <= j; ++t) {
    p += elementary_truncated(t, VariableSet::range(r - j + 1, r), nvars) *
         elementary_truncated(d - t, VariableSet::range(1, r - j), nvars);
  }
  return p;
}

Polynomial complete_two_degree_expansion(int d, int d_prime, int r, int nvars) {
  if (r < 1 || r > nvars) throw std::invalid_argument("r outside [1, n]");
  if (d_prime < 0 || d_prime > d) throw std::invalid_argument("need 0 <= d' <= d");
  Polynomial p = Polynomial::term(1, Monomial::variable(r, nvars, d - d_prime)) *
                 complete_truncated(d_prime, VariableSet::range(r, nvars), nvars);
  for (int t = 1; t <= d - d_prime; ++t) {
    p += Polynomial::term(1, Monomial::variable(r, nvars, d - (d_prime + t))) *
         complete_truncated(d_prime + t, VariableSet::range(r + 1, nvars), nvars);
  }
  return p;
}

Polynomial elem_from_complete_rhs(int d, int nvars) {
  if (d < 1 || d > nvars) throw std::invalid_argument("d outside [1, n]");
  Polynomial p(nvars);
  for (int t = 1; t <= d; ++t) {
    Polynomial prod = elementary_truncated(d - t, VariableSet::range(t + 1, nvars), nvars) *
                      complete_truncated(t, VariableSet::range(t, nvars), nvars);
    if (t % 2 == 0) prod *= Rational(-1);
    p += prod;
  }
  return p;
}

Polynomial truncated_elem_from_complete_rhs(int d, int r, int nvars) {
  if (d < 1 || d > r || r > nvars) throw std::invalid_argument("need 0 < d <= r <= n");
  Polynomial p = complete_truncated(d, VariableSet::range(r + 1, nvars), nvars);
  if (d % 2 == 1) p *= Rational(-1);
  for (int t = 1; t <= d; ++t) {
    Polynomial prod = elementary_truncated(d - t, VariableSet::range(t + 1, r), nvars) *
                      complete_truncated(t, VariableSet::range(t, nvars), nvars);
    if (t % 2 == 0) prod *= Rational(-1);
    p += prod;
  }
  return p;
}

PolyMatrix matrix_B(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  PolyMatrix B(static_cast<size_t>(n), std::vector<Polynomial>(static_cast<size_t>(n), Polynomial(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      Polynomial e = elementary_truncated(i - j, VariableSet::range(j + 1, n), n);
      if (j % 2 == 0) e *= Rational(-1);
      B[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = e;
    }
  }
  return B;
}

PolyMatrix matrix_B_inverse(int n) {
  PolyMatrix B = matrix_B(n);
  PolyMatrix X(static_cast<size_t>(n), std::vector<Polynomial>(static_cast<size_t>(n), Polynomial(n)));
  // solve B * X = I column by column; B is triangular with diagonal (-1)^{i+1}
  for (int c = 1; c <= n; ++c) {
    for (int i = c; i <= n; ++i) {
      Polynomial rhs = i == c ? Polynomial::one(n) : Polynomial::zero(n);
      for (int k = c; k < i; ++k)
        rhs -= B[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)] *
               X[static_cast<size_t>(k - 1)][static_cast<size_t>(c - 1)];
      if (i % 2 == 0) rhs *= Rational(-1);  // divide by the diagonal (-1)^{i+1}
      X[static_cast<size_t>(i - 1)][static_cast<size_t>(c - 1)] = rhs;
    }
  }
  return X;
}

std::vector<Polynomial> elementary_vector(int n) {
  std::vector<Polynomial> v;
  for (int d = 1; d <= n; ++d) v.push_back(elementary_full(d, n));
  return v;
}

std::vector<Polynomial> complete_vector(int n) {
  std::vector<Polynomial> v;
  for (int i = 1; i <= n; ++i)
    v.push_back(complete_truncated(i, VariableSet::range(i, n), n));
  return v;
}

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
  size_t n = a.size();
  if (n == 0 || b.size() != n) throw std::invalid_argument("matrix size mismatch");
  int nv = a[0][0].nvars();
  PolyMatrix r(n, std::vector<Polynomial>(n, Polynomial(nv)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

std::vector<Polynomial> matrix_apply(const PolyMatrix& a, const std::vector<Polynomial>& v) {
  size_t n = a.size();
  if (v.size() != n) throw std::invalid_argument("matrix size mismatch");
  int nv = a[0][0].nvars();
  std::vector<Polynomial> r(n, Polynomial(nv));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) r[i] += a[i][k] * v[k];
  return r;
}

bool is_identity_matrix(const PolyMatrix& a) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) return false;
    for (size_t j = 0; j < n; ++j) {
      int nv = a[i][j].nvars();
      const Polynomial expect = i == j ? Polynomial::one(nv) : Polynomial::zero(nv);
      if (a[i][j] != expect) return false;
    }
  }
  return true;
}

}  // namespace hessideals
