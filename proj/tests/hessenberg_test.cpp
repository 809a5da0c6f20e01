#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hessideals/hessenberg.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace hessideals;

namespace {
HessenbergFunction H(const std::string& s) { return HessenbergFunction::parse(s); }
}  // namespace

TEST_CASE("hessenberg function validation") {
  CHECK(H("3,3,3,4").to_string() == "3,3,3,4");
  CHECK(H("1,2,3,4").at(3) == 3);
  CHECK(H("2,3,3,5,5,6").n() == 6);
  CHECK(H("1") == H("1"));
  CHECK(H("2,2") != H("1,2"));

  // Rule (a): i <= h_i <= n.
  CHECK_THROWS_WITH_AS(H("0,2"), doctest::Contains("rule (a)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(H("1,3"), doctest::Contains("rule (a)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(H("1,1,3"), doctest::Contains("rule (a)"), std::invalid_argument);
  // Rule (b): nondecreasing.
  CHECK_THROWS_WITH_AS(H("3,2,3"), doctest::Contains("rule (b)"), std::invalid_argument);
  CHECK_THROWS_AS(H(""), std::invalid_argument);
  CHECK_THROWS_AS(H("1,x"), std::invalid_argument);
}

TEST_CASE("degree tuples") {
  CHECK(to_degree_tuple(H("3,3,3,4")).ascending() == std::vector<int>{1, 2, 3, 1});
  CHECK(to_degree_tuple(H("2,3,3,5,5,6")).ascending() ==
        std::vector<int>{1, 2, 2, 1, 2, 1});
  CHECK(to_degree_tuple(H("1,2,3,4")).ascending() == std::vector<int>{1, 1, 1, 1});
  CHECK(to_degree_tuple(H("4,4,4,4")).ascending() == std::vector<int>{1, 2, 3, 4});
  // descending() is the reversed display convention (beta_n, ..., beta_1).
  CHECK(to_degree_tuple(H("3,3,3,4")).descending() == std::vector<int>{1, 3, 2, 1});
  CHECK(to_degree_tuple(H("3,3,3,4")).to_string() == "1,2,3,1");

  // Rule (a'): 1 <= beta_i <= i. Rule (b'): consecutive increase at most 1.
  CHECK_THROWS_WITH_AS(DegreeTuple({1, 3}), doctest::Contains("rule (a')"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(DegreeTuple({1, 1, 3}), doctest::Contains("rule (b')"),
                       std::invalid_argument);
  CHECK_THROWS_AS(DegreeTuple({0}), std::invalid_argument);
}

TEST_CASE("h <-> beta is a bijection matching the pointwise orders") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_hessenberg(n);
    std::set<std::vector<int>> betas;
    for (const auto& h : all) {
      const DegreeTuple b = to_degree_tuple(h);
      CHECK(from_degree_tuple(b) == h);
      betas.insert(b.ascending());
    }
    CHECK(betas.size() == all.size());

    // h <= h' pointwise iff beta <= beta' pointwise (order isomorphism).
    if (n == 4) {
      for (const auto& a : all)
        for (const auto& b : all) {
          const auto ba = to_degree_tuple(a).ascending();
          const auto bb = to_degree_tuple(b).ascending();
          bool beta_leq = true;
          for (int i = 0; i < n; ++i) beta_leq = beta_leq && ba[i] <= bb[i];
          CHECK(leq_pointwise(a, b) == beta_leq);
        }
    }
  }
}

TEST_CASE("ample partitions") {
  const Partition p = to_ample_partition(H("3,3,3,4"));
  CHECK(p.parts() == std::vector<int>{4, 3, 3, 3});
  CHECK(p.is_ample());
  CHECK(p.conjugate().parts() == std::vector<int>{4, 4, 4, 1});
  CHECK(from_ample_partition(p) == H("3,3,3,4"));

  // The staircase itself is the smallest ample partition.
  CHECK(Partition({4, 3, 2, 1}, 4).is_ample());
  CHECK_FALSE(Partition({4, 3, 1, 1}, 4).is_ample());
  CHECK_THROWS_AS(from_ample_partition(Partition({4, 3, 1, 1}, 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2}, 2), std::invalid_argument);  // not decreasing

  for (const auto& h : enumerate_hessenberg(5))
    CHECK(from_ample_partition(to_ample_partition(h)) == h);
}

TEST_CASE("dyck paths") {
  CHECK(to_dyck_path(H("3,3,4,4,5,6")).steps() == "DDDRRDRRDRDR");
  CHECK(to_dyck_path(H("4,4,4,4")).steps() == "DDDDRRRR");
  CHECK(to_dyck_path(H("1,2,3,4")).steps() == "DRDRDRDR");

  CHECK(from_dyck_path(DyckPath("DDDRRDRRDRDR")) == H("3,3,4,4,5,6"));
  for (const auto& h : enumerate_hessenberg(5))
    CHECK(from_dyck_path(to_dyck_path(h)) == h);

  CHECK_THROWS_AS(DyckPath("DXDR"), std::invalid_argument);   // bad step char
  CHECK_THROWS_AS(DyckPath("DDR"), std::invalid_argument);    // unbalanced
  CHECK_THROWS_AS(DyckPath("RDRD"), std::invalid_argument);   // crosses diagonal
  CHECK_THROWS_AS(DyckPath("DRRD"), std::invalid_argument);   // crosses midway
}

TEST_CASE("enumeration is complete, sorted, and Catalan-counted") {
  const std::vector<long> counts = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto all = enumerate_hessenberg(n);
    CHECK(BigInt(static_cast<long>(all.size())) == catalan(n));
    CHECK(static_cast<long>(all.size()) == counts[n]);
    CHECK(std::is_sorted(all.begin(), all.end()));
    // Lex extremes: the staircase h_i = i first, the constant h_i = n last.
    for (int i = 1; i <= n; ++i) {
      CHECK(all.front().at(i) == i);
      CHECK(all.back().at(i) == n);
    }
  }
  CHECK(catalan(10) == 16796);
}

TEST_CASE("hessenberg diagram shades beta_r cells in row r") {
  const auto rows = hessenberg_diagram(H("3,3,3,4"));
  CHECK(rows == std::vector<std::string>{"#...", "##..", "###.", "...#"});
  const auto beta = to_degree_tuple(H("3,3,3,4")).ascending();
  for (int r = 0; r < 4; ++r)
    CHECK(std::count(rows[r].begin(), rows[r].end(), '#') == beta[r]);
}

TEST_CASE("hasse diagram structure at n=4") {
  const HasseDiagram d = hasse_diagram(4);
  CHECK(d.vertices.size() == 14);
  CHECK(d.edges.size() == 21);
  CHECK(d.vertices[d.source()] == H("4,4,4,4"));
  CHECK(d.vertices[d.sink()] == H("1,2,3,4"));
  CHECK(d.reachable(d.source(), d.sink()));
  CHECK_FALSE(d.reachable(d.sink(), d.source()));
  CHECK(d.index_of(H("3,3,3,4")) >= 0);
  CHECK_THROWS_AS(d.index_of(H("1,2,3")), std::invalid_argument);

  // Every edge decrements exactly one coordinate by one, staying valid.
  for (const auto& [from, to] : d.edges) {
    const auto& a = d.vertices[from];
    const auto& b = d.vertices[to];
    int diffs = 0;
    for (int i = 1; i <= 4; ++i) {
      CHECK(a.at(i) >= b.at(i));
      if (a.at(i) != b.at(i)) {
        CHECK(a.at(i) - b.at(i) == 1);
        ++diffs;
      }
    }
    CHECK(diffs == 1);
    CHECK(leq_pointwise(b, a));
  }
}

TEST_CASE("maximal chain counts against the product formula") {
  const MaximalChainCount c1 = count_maximal_chains(1);
  CHECK(c1.dfs == 1);
  CHECK(c1.product_matches);

  const MaximalChainCount c3 = count_maximal_chains(3);
  CHECK(c3.dfs == 2);
  CHECK(c3.product_formula == 2);
  CHECK_FALSE(c3.flat_matches);

  const MaximalChainCount c4 = count_maximal_chains(4);
  CHECK(c4.dfs == 16);
  CHECK(c4.product_formula == 16);
  CHECK(c4.product_matches);
  CHECK(to_string(c4.flat_exponent_formula) == "16/75");
  CHECK_FALSE(c4.flat_matches);

  const MaximalChainCount c5 = count_maximal_chains(5);
  CHECK(c5.dfs == 768);
  CHECK(c5.product_matches);
}

TEST_CASE("dot export") {
  const HasseDiagram d = hasse_diagram(3);
  const std::string dot = hasse_to_dot(d);
  CHECK(dot.find("digraph hessenberg_order") != std::string::npos);
  CHECK(dot.find("\"3,3,3\" -> \"2,3,3\"") != std::string::npos);
  CHECK(dot.find("dashed") == std::string::npos);

  std::vector<bool> marked(d.edges.size(), false);
  marked[0] = true;
  const std::string dot_marked = hasse_to_dot(d, &marked);
  CHECK(dot_marked.find("dashed") != std::string::npos);
}

TEST_CASE("enumeration json payload") {
  const nlohmann::json j = nlohmann::json::parse(enumeration_json(4));
  CHECK(j["n"] == 4);
  CHECK(j["count"] == 14);
  CHECK(j["functions"].size() == 14);
  CHECK(j["functions"][0]["h"] == std::vector<int>{1, 2, 3, 4});
  CHECK(j["functions"][0]["beta"] == std::vector<int>{1, 1, 1, 1});
  CHECK(j["functions"][0]["dyck"] == "DRDRDRDR");
  CHECK(j["functions"][0]["catalan_index"] == 0);
  CHECK(j["functions"][13]["h"] == std::vector<int>{4, 4, 4, 4});
}
