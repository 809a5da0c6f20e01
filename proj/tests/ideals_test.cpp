#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hessideals/hessenberg.hpp>
#include <hessideals/ideals.hpp>
#include <hessideals/symfun.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace hessideals;

namespace {

HessenbergFunction H(const std::string& s) { return HessenbergFunction::parse(s); }
Polynomial P(const std::string& s, int nvars = 4) { return Polynomial::parse(s, nvars); }

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

bool all_pass(const std::vector<VerificationRecord>& recs) {
  REQUIRE_FALSE(recs.empty());
  for (const auto& r : recs) {
    CAPTURE(r.claim);
    CAPTURE(r.subject);
    CAPTURE(r.witness);
    CHECK(r.pass);
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ideal kind names") {
  CHECK(kind_name(IdealKind::Triangular) == "triangular");
  CHECK(kind_name(IdealKind::Antidiagonal) == "antidiagonal");
  CHECK(kind_name(IdealKind::Basis) == "basis");
  CHECK(kind_from_name("triangular") == IdealKind::Triangular);
  CHECK(kind_from_name("C") == IdealKind::Triangular);
  CHECK(kind_from_name("ad") == IdealKind::Antidiagonal);
  CHECK(kind_from_name("J") == IdealKind::Basis);
  CHECK(kind_from_name("BASIS") == IdealKind::Basis);
  CHECK_THROWS_AS(kind_from_name("nope"), std::invalid_argument);
}

TEST_CASE("triangular presentation of 3,3,3,4") {
  const IdealPresentation p = triangular_presentation(H("3,3,3,4"));
  CHECK(p.kind == IdealKind::Triangular);
  CHECK(p.cells.size() == 10);  // 1 + 2 + 3 + 4 cells
  // Cell (i, r) holds a degree h_i - r polynomial on the first h_i variables.
  for (const auto& c : p.cells) {
    CHECK(c.degree == H("3,3,3,4").at(c.i) - c.r);
    CHECK(c.poly == elementary_truncated(c.degree,
                                         VariableSet::range(1, H("3,3,3,4").at(c.i)), 4));
  }
  // Duplicates collapse in first-occurrence order.
  CHECK(strings(p.generators) ==
        std::vector<std::string>{
            "x1*x2*x3",
            "x1*x2 + x1*x3 + x2*x3",
            "x1 + x2 + x3",
            "x1*x2*x3*x4",
            "x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4",
            "x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4",
            "x1 + x2 + x3 + x4",
        });
}

TEST_CASE("antidiagonal presentation keeps one cell per column") {
  const IdealPresentation p = antidiagonal_presentation(H("3,3,3,4"));
  CHECK(p.cells.size() == 4);
  for (const auto& c : p.cells) CHECK(c.r == c.i - 1);
  CHECK(strings(p.generators) ==
        std::vector<std::string>{"x1*x2*x3", "x1*x2 + x1*x3 + x2*x3", "x1 + x2 + x3",
                                 "x1 + x2 + x3 + x4"});
  // Antidiagonal cells are a subfamily of the triangular family.
  const IdealPresentation tri = triangular_presentation(H("3,3,3,4"));
  for (const auto& g : p.generators)
    CHECK(std::count(tri.generators.begin(), tri.generators.end(), g) == 1);
}

TEST_CASE("basis presentation of 3,3,3,4") {
  const IdealPresentation p = basis_presentation(H("3,3,3,4"));
  CHECK(p.cells.size() == 4);
  CHECK(strings(p.generators) ==
        std::vector<std::string>{"x1 + x2 + x3 + x4",
                                 "x2^2 + x2*x3 + x2*x4 + x3^2 + x3*x4 + x4^2",
                                 "x3^3 + x3^2*x4 + x3*x4^2 + x4^3", "x4"});
  // Generator i is the complete polynomial of degree beta_i on x_i..x_n.
  const auto beta = to_degree_tuple(H("3,3,3,4")).ascending();
  for (int i = 1; i <= 4; ++i)
    CHECK(p.generators[i - 1] ==
          complete_truncated(beta[i - 1], VariableSet::range(i, 4), 4));
  CHECK(make_presentation(IdealKind::Basis, H("3,3,3,4")).generators == p.generators);
}

TEST_CASE("degree tableau") {
  const HFerrersDiagram d = h_ferrers_diagram(H("3,3,3,4"));
  CHECK(d.n == 4);
  CHECK(d.columns[0] == std::vector<int>{3});
  CHECK(d.columns[1] == std::vector<int>{3, 2});
  CHECK(d.columns[2] == std::vector<int>{3, 2, 1});
  CHECK(d.columns[3] == std::vector<int>{4, 3, 2, 1});
  CHECK(d.antidiagonal() == std::vector<int>{3, 2, 1, 1});
  CHECK(d.render().size() == 4);
}

TEST_CASE("groebner check certifies coprime leading terms without s-pairs") {
  const auto gens = basis_presentation(H("3,3,3,4")).generators;
  for (const auto ord : {MonomialOrder::Lex, MonomialOrder::GrLex}) {
    CAPTURE(order_name(ord));
    const GroebnerCheck chk = is_groebner(gens, ord);
    CHECK(chk.is_groebner);
    CHECK(chk.certificate == GroebnerCertificate::PairwiseCoprimeLeadingTerms);

    // Forcing the s-pair pass keeps the stronger certificate but records
    // that the reduction was actually performed.
    const GroebnerCheck full = is_groebner(gens, ord, /*force_spair_check=*/true);
    CHECK(full.is_groebner);
    CHECK(full.certificate == GroebnerCertificate::PairwiseCoprimeLeadingTerms);
    CHECK(full.witness == "confirmed by full s-pair reduction");
  }
  CHECK(certificate_name(GroebnerCertificate::PairwiseCoprimeLeadingTerms) ==
        "pairwise-coprime-leading-terms");
  CHECK(certificate_name(GroebnerCertificate::SPairReduction) == "s-pair-reduction");
}

TEST_CASE("groebner check rejects a non-basis with a witness") {
  // {x1^2 - x2, x1*x2 - 1}: the s-polynomial leaves remainder, so the pair
  // generates new leading terms.
  const std::vector<Polynomial> gens = {P("x1^2 - x2", 2), P("x1*x2 - 1", 2)};
  const GroebnerCheck chk = is_groebner(gens, MonomialOrder::Lex);
  CHECK_FALSE(chk.is_groebner);
  CHECK_FALSE(chk.witness.empty());
}

TEST_CASE("buchberger on a textbook pair") {
  const std::vector<Polynomial> gens = {P("x1*x2 - 1", 2), P("x2^2 - 1", 2)};
  const GroebnerBasis gb = buchberger(gens, 2, MonomialOrder::Lex);
  CHECK(strings(gb.basis) == std::vector<std::string>{"x1 - x2", "x2^2 - 1"});
  CHECK(gb.certificate == GroebnerCertificate::SPairReduction);
}

TEST_CASE("reduced groebner basis of both families at 3,3,3,4") {
  const std::vector<std::string> expected = {"x1 + x2 + x3", "x2^2 + x2*x3 + x3^2",
                                             "x3^3", "x4"};
  for (const auto kind : {IdealKind::Triangular, IdealKind::Antidiagonal}) {
    CAPTURE(kind_name(kind));
    const auto gens = make_presentation(kind, H("3,3,3,4")).generators;
    const GroebnerBasis gb = buchberger(gens, 4, MonomialOrder::Lex);
    CHECK(strings(gb.basis) == expected);
  }
  // The basis family reduces to the same canonical basis.
  GroebnerCache cache;
  const GroebnerBasis& jb = cache.get(IdealKind::Basis, H("3,3,3,4"), MonomialOrder::Lex);
  CHECK(strings(jb.basis) == expected);
  CHECK(jb.certificate == GroebnerCertificate::PairwiseCoprimeLeadingTerms);
}

TEST_CASE("reduced bases are monic, autoreduced, and descending") {
  const auto gens = triangular_presentation(H("2,3,4,4")).generators;
  const GroebnerBasis gb = buchberger(gens, 4, MonomialOrder::Lex);
  REQUIRE_FALSE(gb.basis.empty());
  for (size_t i = 0; i < gb.basis.size(); ++i) {
    CHECK(gb.basis[i].leading_coefficient(MonomialOrder::Lex) == 1);
    if (i + 1 < gb.basis.size())
      CHECK(order_greater(gb.basis[i].leading_monomial(MonomialOrder::Lex),
                          gb.basis[i + 1].leading_monomial(MonomialOrder::Lex),
                          MonomialOrder::Lex));
    // No term of one element is divisible by another element's leading term.
    for (size_t j = 0; j < gb.basis.size(); ++j) {
      if (i == j) continue;
      const Monomial lt = gb.basis[j].leading_monomial(MonomialOrder::Lex);
      for (const auto& [m, c] : gb.basis[i].terms()) CHECK_FALSE(lt.divides(m));
    }
  }
}

TEST_CASE("ideal membership and normal forms") {
  GroebnerCache cache;
  const GroebnerBasis& gb = cache.get(IdealKind::Basis, H("3,3,3,4"), MonomialOrder::Lex);

  CHECK(ideal_membership(P("x4"), gb).member);
  CHECK(ideal_membership(P("x1*x2*x3"), gb).member);
  CHECK(ideal_membership(P("x1 + x2 + x3 + x4"), gb).member);

  const MembershipResult nf1 = ideal_membership(P("x1*x2"), gb);
  CHECK_FALSE(nf1.member);
  CHECK(nf1.normal_form == P("x3^2"));
  const MembershipResult nf2 = ideal_membership(P("x2^2"), gb);
  CHECK(nf2.normal_form == P("-x2*x3 - x3^2"));
}

TEST_CASE("containment follows the reversed pointwise order") {
  GroebnerCache cache;
  // Smaller function => larger ideal: everything lies in the staircase ideal.
  const GroebnerBasis& staircase =
      cache.get(IdealKind::Basis, H("1,2,3,4"), MonomialOrder::Lex);
  const ContainmentResult big =
      ideal_contains(staircase, basis_presentation(H("3,3,3,4")).generators);
  CHECK(big.contained);

  const GroebnerBasis& smaller =
      cache.get(IdealKind::Basis, H("3,3,3,4"), MonomialOrder::Lex);
  const ContainmentResult rev =
      ideal_contains(smaller, basis_presentation(H("1,2,3,4")).generators);
  CHECK_FALSE(rev.contained);
  REQUIRE(rev.witness_generator.has_value());
  REQUIRE(rev.witness_remainder.has_value());
  CHECK_FALSE(rev.witness_remainder->is_zero());
  // The witness really is one of the supplied generators.
  const auto gens = basis_presentation(H("1,2,3,4")).generators;
  CHECK(std::count(gens.begin(), gens.end(), *rev.witness_generator) == 1);
}

TEST_CASE("groebner cache returns one shared basis per key") {
  GroebnerCache cache;
  const GroebnerBasis& a = cache.get(IdealKind::Triangular, H("3,3,4,4"), MonomialOrder::Lex);
  const GroebnerBasis& b = cache.get(IdealKind::Triangular, H("3,3,4,4"), MonomialOrder::Lex);
  CHECK(&a == &b);
  const GroebnerBasis fresh =
      buchberger(triangular_presentation(H("3,3,4,4")).generators, 4, MonomialOrder::Lex);
  CHECK(a.basis == fresh.basis);
  // Distinct orders are distinct cache keys.
  const GroebnerBasis& c = cache.get(IdealKind::Triangular, H("3,3,4,4"), MonomialOrder::GrLex);
  CHECK(&a != &c);
  CHECK(c.order == MonomialOrder::GrLex);
}

TEST_CASE("ideal equality of the two families") {
  GroebnerCache cache;
  const EqualityReport rep = verify_ideal_equality(H("2,3,4,4"), MonomialOrder::Lex, cache);
  CHECK(rep.equal);
  CHECK(rep.reduced_bases_match);
}

TEST_CASE("generator containment marks 15 of 21 edges at n=4 and spans") {
  const GeneratorContainmentReport rep = generator_containment_edges(4);
  CHECK(rep.spanning_to_sink);
  CHECK(std::count(rep.marked.begin(), rep.marked.end(), true) == 15);

  const std::set<std::pair<std::string, std::string>> golden = {
      {"1,2,4,4", "1,2,3,4"}, {"1,3,3,4", "1,2,3,4"}, {"1,3,4,4", "1,3,3,4"},
      {"1,4,4,4", "1,3,4,4"}, {"2,2,3,4", "1,2,3,4"}, {"2,2,4,4", "1,2,4,4"},
      {"2,2,4,4", "2,2,3,4"}, {"2,3,3,4", "2,2,3,4"}, {"2,3,4,4", "2,3,3,4"},
      {"2,4,4,4", "2,3,4,4"}, {"3,3,3,4", "2,3,3,4"}, {"3,3,4,4", "2,3,4,4"},
      {"3,3,4,4", "3,3,3,4"}, {"3,4,4,4", "3,3,4,4"}, {"4,4,4,4", "3,4,4,4"},
  };
  std::set<std::pair<std::string, std::string>> got;
  for (size_t e = 0; e < rep.diagram.edges.size(); ++e)
    if (rep.marked[e])
      got.insert({rep.diagram.vertices[rep.diagram.edges[e].first].to_string(),
                  rep.diagram.vertices[rep.diagram.edges[e].second].to_string()});
  CHECK(got == golden);
}

TEST_CASE("verification sweeps are clean at n=3") {
  GroebnerCache cache;
  CHECK(all_pass(verify_counts(3)));
  CHECK(all_pass(verify_identities(3)));
  CHECK(all_pass(verify_matrix_identities(3)));
  CHECK(all_pass(verify_groebner_property(3, /*spair_confirm=*/true)));
  CHECK(all_pass(verify_containment(3, cache)));
  CHECK(all_pass(verify_incomparable(3, cache)));
  CHECK(all_pass(verify_equality_sweep(3, cache)));
  CHECK(all_pass(verify_reduced_generators(3, cache)));
  CHECK(all_pass(verify_minimality_sweep(3)));
  CHECK(all_pass(verify_generator_containment(3)));
}

TEST_CASE("verification sweeps are clean at n=4") {
  GroebnerCache cache;
  CHECK(all_pass(verify_counts(4)));
  CHECK(all_pass(verify_groebner_property(4, /*spair_confirm=*/true, 2)));
  CHECK(all_pass(verify_containment(4, cache, 2)));
  CHECK(all_pass(verify_incomparable(4, cache, 2)));
  CHECK(all_pass(verify_equality_sweep(4, cache, 2)));
  CHECK(all_pass(verify_reduced_generators(4, cache, 2)));
  CHECK(all_pass(verify_minimality_sweep(4, 2)));
  CHECK(all_pass(verify_generator_containment(4)));
}

TEST_CASE("sweeps can be restricted to a single function") {
  GroebnerCache cache;
  const HessenbergFunction h = H("3,3,3,4");
  CHECK(verify_equality_sweep(4, cache, 0, &h).size() == 1);
  CHECK(verify_minimality_sweep(4, 0, &h).size() == 1);
  CHECK(verify_groebner_property(4, false, 0, &h).size() == 1);
}

TEST_CASE("verification records serialize to json") {
  const auto recs = verify_counts(4);
  const nlohmann::json j = nlohmann::json::parse(records_to_json(recs));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == recs.size());
  CHECK(j[0]["claim"] == "counts");
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0].contains("h"));
  CHECK(j[0].contains("witness"));
  CHECK_FALSE(j[0].contains("elapsed_ms"));

  const nlohmann::json timed = nlohmann::json::parse(records_to_json(recs, true));
  CHECK(timed[0].contains("elapsed_ms"));
}
