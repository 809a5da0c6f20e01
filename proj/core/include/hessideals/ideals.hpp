// Ideal presentations attached to a Hessenberg function, Groebner machinery
// (Buchberger completion with the Gebauer-Moeller pair update), membership
// and containment tests, and the verification sweeps behind the `verify`
// command: every checkable claim returns VerificationRecords with witnesses.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hessideals/hessenberg.hpp"
#include "hessideals/polynomial.hpp"
#include "hessideals/symfun.hpp"

namespace hessideals {

// The three generating families attached to h:
//   Triangular:   e_{h_i - r}(1..h_i) for 1 <= i <= n, 0 <= r <= i-1
//   Antidiagonal: e_{h_i - (i-1)}(1..h_i), the top box of each column
//   Basis:        ~e_{beta_i}(i..n), whose leading terms are x_i^{beta_i}
enum class IdealKind { Triangular, Antidiagonal, Basis };

std::string kind_name(IdealKind kind);
IdealKind kind_from_name(const std::string& name);  // accepts long names (case-insensitive)

// One generator with its provenance in the triangular array.
struct CellGenerator {
  int i;       // column (function position), 1-based
  int r;       // offset below the column top entry h_i (0 = bottom); 0 for Basis
  int degree;  // degree of the generator
  Polynomial poly;
};

struct IdealPresentation {
  IdealKind kind;
  HessenbergFunction h;
  std::vector<CellGenerator> cells;     // full family in (i, r) order
  std::vector<Polynomial> generators;   // deduplicated, first-occurrence order
};

IdealPresentation triangular_presentation(const HessenbergFunction& h);
IdealPresentation antidiagonal_presentation(const HessenbergFunction& h);
IdealPresentation basis_presentation(const HessenbergFunction& h);
IdealPresentation make_presentation(IdealKind kind, const HessenbergFunction& h);

// Staircase tableau of generator degrees: column i holds, bottom to top,
// h_i, h_i - 1, ..., h_i - (i-1). Its top (antidiagonal) entries index the
// antidiagonal presentation.
struct HFerrersDiagram {
  int n = 0;
  std::vector<std::vector<int>> columns;  // columns[i-1], bottom to top
  std::vector<int> antidiagonal() const;  // h_i - (i-1) for each i
  std::vector<std::string> render() const;  // text rows, top row first
};

HFerrersDiagram h_ferrers_diagram(const HessenbergFunction& h);

// How a generating set was certified to be a Groebner basis.
enum class GroebnerCertificate {
  PairwiseCoprimeLeadingTerms,  // all S-pairs reduce to zero automatically
  SPairReduction,               // every S-polynomial reduced to zero explicitly
};

std::string certificate_name(GroebnerCertificate c);

struct GroebnerCheck {
  bool is_groebner = false;
  GroebnerCertificate certificate = GroebnerCertificate::SPairReduction;
  std::string witness;  // on failure: the S-pair whose remainder is nonzero
};

// Certificate-first check: pairwise-coprime leading monomials suffice; with
// force_spair_check (or when coprimality fails) every S-polynomial is
// reduced against the set.
GroebnerCheck is_groebner(const std::vector<Polynomial>& gens, MonomialOrder order,
                          bool force_spair_check = false);

// Reduced Groebner basis: monic, no term of any element divisible by the
// leading monomial of another, sorted descending by leading monomial. Two
// ideals are equal iff their reduced bases are equal as lists.
struct GroebnerBasis {
  int nvars = 0;
  MonomialOrder order = MonomialOrder::Lex;
  GroebnerCertificate certificate = GroebnerCertificate::SPairReduction;
  std::vector<Polynomial> basis;
};

// Buchberger completion (normal pair selection, Gebauer-Moeller update),
// followed by minimalization and full autoreduction. Accepts an empty or
// all-zero generator list (the zero ideal).
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, int nvars, MonomialOrder order);

struct MembershipResult {
  bool member = false;
  Polynomial normal_form;  // zero iff member
};

MembershipResult ideal_membership(const Polynomial& f, const GroebnerBasis& gb);

struct ContainmentResult {
  bool contained = true;
  std::optional<Polynomial> witness_generator;  // a generator outside the big ideal
  std::optional<Polynomial> witness_remainder;  // its nonzero normal form
};

// Does the ideal with Groebner basis `big` contain every given generator?
ContainmentResult ideal_contains(const GroebnerBasis& big,
                                 const std::vector<Polynomial>& small_gens);

// Thread-safe memo of reduced Groebner bases keyed by (kind, h, order).
// Basis-kind presentations skip Buchberger: their generators are certified
// by coprime leading terms and only need autoreduction.
class GroebnerCache {
 public:
  const GroebnerBasis& get(IdealKind kind, const HessenbergFunction& h, MonomialOrder order);

 private:
  using Key = std::tuple<int, std::vector<int>, int>;
  std::map<Key, std::shared_ptr<const GroebnerBasis>> map_;
  std::mutex mu_;
};

struct EqualityReport {
  bool equal = false;
  bool reduced_bases_match = false;  // list equality of the two reduced bases
  const GroebnerBasis* lhs = nullptr;  // triangular presentation (cached)
  const GroebnerBasis* rhs = nullptr;  // basis presentation (cached)
  std::string witness;
};

// Central check: the triangular-family ideal equals the basis-family ideal,
// decided by reduced-Groebner-basis equality under the given order.
EqualityReport verify_ideal_equality(const HessenbergFunction& h, MonomialOrder order,
                                     GroebnerCache& cache);

// Hasse diagram with each edge h -> h' (h covers h') marked when the
// deduplicated triangular generating set of h is literally a subset of the
// one of h'.
struct GeneratorContainmentReport {
  HasseDiagram diagram;
  std::vector<bool> marked;   // parallel to diagram.edges
  bool spanning_to_sink = false;  // every vertex reaches (1,2,...,n) via marked edges
};

GeneratorContainmentReport generator_containment_edges(int n);

// One verification outcome. For per-function claims `subject` is the
// function; for edge or pair claims it labels the edge/pair; empty for
// whole-n claims.
struct VerificationRecord {
  std::string subject;
  std::string claim;
  bool pass = false;
  std::string witness;     // failure details, or certificate info on pass
  long long elapsed_ms = 0;
};

// JSON array [{h, claim, status, witness, elapsed_ms?}...]; timing is
// omitted by default so identical invocations are byte-identical.
std::string records_to_json(const std::vector<VerificationRecord>& records,
                            bool include_timing = false);

// ---- Verification sweeps (one per registered claim) ----

// Enumeration count equals the Catalan number; Hasse chain count matches the
// product formula (and reports on the flat-exponent variant).
std::vector<VerificationRecord> verify_counts(int n);

// All decomposition/expansion identities from symfun hold as exact
// polynomial equalities over their full parameter ranges.
std::vector<VerificationRecord> verify_identities(int n);

// B * B^{-1} = Id and B applied to the complete-family vector yields the
// elementary-family vector.
std::vector<VerificationRecord> verify_matrix_identities(int n);

// For every Hasse edge h -> h', the ideal of h is contained in the ideal of
// h', for the triangular and the basis family. When `only` is given, edge
// and per-function sweeps restrict to items involving that function.
std::vector<VerificationRecord> verify_containment(int n, GroebnerCache& cache, int workers = 0,
                                                   const HessenbergFunction* only = nullptr);

// For every pointwise-incomparable pair, a generator of each ideal is
// certified to lie outside the other (two-way non-containment witnesses).
std::vector<VerificationRecord> verify_incomparable(int n, GroebnerCache& cache, int workers = 0,
                                                    const HessenbergFunction* only = nullptr);

// The basis-family generators form a Groebner basis under lex and grlex via
// the coprimality certificate, with leading monomials exactly x_i^{beta_i};
// with spair_confirm the certificate is re-proved by reducing every
// S-polynomial.
std::vector<VerificationRecord> verify_groebner_property(int n, bool spair_confirm,
                                                         int workers = 0,
                                                         const HessenbergFunction* only = nullptr);

// Triangular ideal == basis ideal for every h (reduced-basis equality).
std::vector<VerificationRecord> verify_equality_sweep(int n, GroebnerCache& cache,
                                                      int workers = 0,
                                                      const HessenbergFunction* only = nullptr);

// The antidiagonal subfamily generates the same ideal as the full
// triangular family.
std::vector<VerificationRecord> verify_reduced_generators(int n, GroebnerCache& cache,
                                                          int workers = 0,
                                                          const HessenbergFunction* only = nullptr);

// No antidiagonal generator is redundant: each lies outside the ideal of
// the remaining ones.
std::vector<VerificationRecord> verify_minimality_sweep(int n, int workers = 0,
                                                        const HessenbergFunction* only = nullptr);

// Marked-edge subgraph data: every marked edge is a true generating-set
// inclusion, no unmarked edge is, and the marked subgraph connects every
// vertex to (1,2,...,n).
std::vector<VerificationRecord> verify_generator_containment(int n);

}  // namespace hessideals
