// The quotient of the polynomial ring by the basis-family ideal: its
// leading-term ideal, the induced monomial module basis, rank, graded
// dimensions, and canonical normal forms.
#pragma once

#include <functional>
#include <vector>

#include "hessideals/hessenberg.hpp"
#include "hessideals/ideals.hpp"
#include "hessideals/monomial.hpp"
#include "hessideals/polynomial.hpp"

namespace hessideals {

// Generators x_i^{beta_i} of the leading-term ideal of the basis family
// (the same under lex and grlex).
std::vector<Monomial> lt_ideal_generators(const HessenbergFunction& h);

// The monomials x^a with a_i <= beta_i - 1 for every i, in ascending lex
// order; their residues form a module basis of the quotient.
std::vector<Monomial> monomial_basis(const HessenbergFunction& h);

// Streams the same monomials in the same order without materializing the
// whole list.
void for_each_basis_monomial(const HessenbergFunction& h,
                             const std::function<void(const Monomial&)>& visit);

// prod_i beta_i = |monomial_basis(h)|. Throws std::overflow_error if the
// product exceeds long long (not reachable for any practical n).
long long quotient_rank(const HessenbergFunction& h);

// Coefficients of prod_i (1 + t + ... + t^{beta_i - 1}): entry d counts
// basis monomials of total degree d.
std::vector<long long> graded_dimensions(const HessenbergFunction& h);

// Degree histogram recounted directly from monomial_basis, for
// cross-checking against graded_dimensions.
std::vector<long long> graded_histogram(const HessenbergFunction& h);

// Canonical representative of f modulo the basis-family ideal: the
// remainder on division by the cached reduced basis (lex). Supported on
// basis monomials only.
Polynomial normal_form(const Polynomial& f, const HessenbergFunction& h, GroebnerCache& cache);

// Per-function quotient claims: rank == product == basis count, histogram
// == product expansion, basis monomials are fixed by normal_form, the ideal
// generators reduce to zero, and rank((n,...,n)) = n!.
std::vector<VerificationRecord> verify_quotient_data(int n, GroebnerCache& cache, int workers = 0,
                                                     const HessenbergFunction* only = nullptr);

}  // namespace hessideals
