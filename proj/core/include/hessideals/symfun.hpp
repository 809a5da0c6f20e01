// Truncated elementary and complete symmetric functions e_d(S), ~e_d(S),
// the right-hand sides of the decomposition identities relating them, and
// the polynomial matrix that changes basis between the two families.
//
// Constructors enumerate subsets/multisets directly so they are independent
// of the decomposition identities they are used to test.
#pragma once

#include <initializer_list>
#include <vector>

#include "hessideals/polynomial.hpp"

namespace hessideals {

// Ascending set of 1-based variable indices inside an ambient ring.
struct VariableSet {
  std::vector<int> indices;

  VariableSet() = default;
  VariableSet(std::initializer_list<int> idx);
  explicit VariableSet(std::vector<int> idx);
  // {lo, lo+1, ..., hi}; empty when lo > hi.
  static VariableSet range(int lo, int hi);

  int size() const { return static_cast<int>(indices.size()); }
  bool empty() const { return indices.empty(); }
};

// e_d(S): sum of all squarefree degree-d monomials in the variables of S.
// Conventions: d = 0 -> 1 (even for empty S); d < 0 -> 0; d > |S| -> 0.
Polynomial elementary_truncated(int d, const VariableSet& S, int nvars);

// ~e_d(S): sum of all degree-d monomials (repetition allowed) in S.
// Conventions: d = 0 -> 1; d < 0 -> 0; empty S with d != 0 -> 0.
Polynomial complete_truncated(int d, const VariableSet& S, int nvars);

// e_d in all nvars variables.
Polynomial elementary_full(int d, int nvars);

// x_r * e_{d-1}(1..r-1) + e_d(1..r-1); equals e_d(1..r).
Polynomial elem_decomposition_rhs(int d, int r, int nvars);

// x_r * ~e_{d-1}(r..n) + ~e_d(r+1..n); equals ~e_d(r..n).
Polynomial complete_decomposition_rhs(int d, int r, int nvars);

// sum_{t=0}^{j} e_t(r-j+1..r) * e_{d-t}(1..r-j); equals e_d(1..r).
Polynomial elem_fixed_varset_expansion(int d, int r, int j, int nvars);

// x_r^{d-d'} * ~e_{d'}(r..n) + sum_{t=1}^{d-d'} x_r^{d-(d'+t)} * ~e_{d'+t}(r+1..n);
// equals ~e_d(r..n).
Polynomial complete_two_degree_expansion(int d, int d_prime, int r, int nvars);

// sum_{t=1}^{d} (-1)^{t+1} e_{d-t}(t+1..n) * ~e_t(t..n); equals e_d(1..n).
Polynomial elem_from_complete_rhs(int d, int nvars);

// (-1)^d ~e_d(r+1..n) + sum_{t=1}^{d} (-1)^{t+1} e_{d-t}(t+1..r) * ~e_t(t..n);
// equals e_d(1..r). The r = d case is the base case of the induction behind
// it; r = d = n recovers elem_from_complete_rhs.
Polynomial truncated_elem_from_complete_rhs(int d, int r, int nvars);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Lower-triangular B with b_ij = (-1)^{j+1} e_{i-j}(j+1..n) for j <= i.
// Satisfies B * (~e_1(1..n), ..., ~e_n(n))^T = (e_1, ..., e_n)^T.
PolyMatrix matrix_B(int n);

// Exact inverse of matrix_B via forward substitution (diagonal entries of B
// are the scalars (-1)^{i+1}).
PolyMatrix matrix_B_inverse(int n);

// (e_1, ..., e_n) and (~e_1(1..n), ~e_2(2..n), ..., ~e_n(n)).
std::vector<Polynomial> elementary_vector(int n);
std::vector<Polynomial> complete_vector(int n);

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b);
std::vector<Polynomial> matrix_apply(const PolyMatrix& a, const std::vector<Polynomial>& v);
bool is_identity_matrix(const PolyMatrix& a);

}  // namespace hessideals
