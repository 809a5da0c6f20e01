// Combinatorics of Hessenberg functions: validation, the bijections with
// degree tuples / ample partitions / Dyck paths, enumeration, the Hasse
// diagram of the pointwise partial order, chain counting, and diagram
// renderings.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hessideals/rational.hpp"

namespace hessideals {

// Nondecreasing h: {1..n} -> {1..n} with h(i) >= i.
// Rule (a): i <= h_i <= n.  Rule (b): h_i <= h_{i+1}.
class HessenbergFunction {
 public:
  // Throws std::invalid_argument naming the violated rule and index.
  explicit HessenbergFunction(std::vector<int> values);
  // Comma-separated text form, e.g. "3,3,3,4".
  static HessenbergFunction parse(const std::string& text);

  int n() const { return static_cast<int>(values_.size()); }
  int at(int i) const;  // h_i, 1-based
  const std::vector<int>& values() const { return values_; }
  std::string to_string() const;

  bool operator==(const HessenbergFunction& o) const { return values_ == o.values_; }
  bool operator!=(const HessenbergFunction& o) const { return values_ != o.values_; }
  bool operator<(const HessenbergFunction& o) const { return values_ < o.values_; }

 private:
  std::vector<int> values_;
};

// h <= h' in every coordinate.
bool leq_pointwise(const HessenbergFunction& a, const HessenbergFunction& b);

// Degrees beta_1..beta_n with 1 <= beta_i <= i (rule (a')) and
// beta_i - beta_{i-1} <= 1 (rule (b')). Stored ascending by index; the
// descending() accessor gives the (beta_n, ..., beta_1) display convention.
class DegreeTuple {
 public:
  explicit DegreeTuple(std::vector<int> ascending);

  int n() const { return static_cast<int>(beta_.size()); }
  int at(int i) const;  // beta_i, 1-based
  const std::vector<int>& ascending() const { return beta_; }
  std::vector<int> descending() const;
  std::string to_string() const;  // ascending order, comma-separated

  bool operator==(const DegreeTuple& o) const { return beta_ == o.beta_; }
  bool operator!=(const DegreeTuple& o) const { return beta_ != o.beta_; }

 private:
  std::vector<int> beta_;
};

// beta_i = i - #{k : h_k < i}.
DegreeTuple to_degree_tuple(const HessenbergFunction& h);
HessenbergFunction from_degree_tuple(const DegreeTuple& b);

// Partition with at most n parts, each part <= n (trailing zeros kept so the
// length is always n).
class Partition {
 public:
  Partition(std::vector<int> parts, int n);

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  // Contains the staircase (n, n-1, ..., 1), i.e. parts_[i-1] >= n-i+1.
  bool is_ample() const;
  Partition conjugate() const;

  bool operator==(const Partition& o) const { return n_ == o.n_ && parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

 private:
  std::vector<int> parts_;
  int n_;
};

Partition to_ample_partition(const HessenbergFunction& h);  // reverse of h
HessenbergFunction from_ample_partition(const Partition& p);

// Lattice path from (0,n) to (n,0) in Down/Right steps, staying weakly
// below the antidiagonal (every prefix has #R <= #D).
class DyckPath {
 public:
  explicit DyckPath(std::string steps);  // chars 'D' and 'R'
  const std::string& steps() const { return steps_; }
  int n() const { return static_cast<int>(steps_.size()) / 2; }

  bool operator==(const DyckPath& o) const { return steps_ == o.steps_; }
  bool operator!=(const DyckPath& o) const { return steps_ != o.steps_; }

 private:
  std::string steps_;
};

// The path running at height n - h_i under column i (the boundary path of
// the conjugate of the reversed h, matching the drawn convention where
// column i holds h_i boxes between the path and the top of the square).
DyckPath to_dyck_path(const HessenbergFunction& h);
HessenbergFunction from_dyck_path(const DyckPath& p);

// All Hessenberg functions for n, lexicographically sorted; the count is
// the n-th Catalan number.
std::vector<HessenbergFunction> enumerate_hessenberg(int n);
BigInt catalan(int n);

// Covers point downward: an edge h -> h' decrements exactly one coordinate.
// Unique source (n,...,n) and sink (1,2,...,n).
struct HasseDiagram {
  int n = 0;
  std::vector<HessenbergFunction> vertices;       // lex sorted
  std::vector<std::pair<int, int>> edges;         // (from, to) vertex indices
  std::vector<std::vector<int>> out_neighbors;    // by vertex index
  std::vector<std::vector<int>> out_edge_ids;     // edge index parallel to out_neighbors

  int index_of(const HessenbergFunction& h) const;  // throws when absent
  int source() const;
  int sink() const;
  bool reachable(int from, int to) const;

  std::map<std::vector<int>, int> index;
};

HasseDiagram hasse_diagram(int n);

struct MaximalChainCount {
  BigInt dfs;                      // path count source -> sink (ground truth)
  BigInt product_formula;          // C(n,2)! / prod_{i=1}^{n-1} (2i-1)^(n-i)
  Rational flat_exponent_formula;  // variant with constant exponent n-1, kept exact
  bool product_matches;            // dfs == product_formula
  bool flat_matches;               // dfs == flat_exponent_formula (fails from n=3 on)
};

MaximalChainCount count_maximal_chains(int n);

// n x n grid, '#' shaded: cell (row r, column i) is shaded iff i <= r <= h_i.
// Row r then carries exactly beta_r shaded cells.
std::vector<std::string> hessenberg_diagram(const HessenbergFunction& h);

// DOT digraph of the Hasse diagram; when marked is given (parallel to
// edges), marked edges are drawn doubled-and-dashed.
std::string hasse_to_dot(const HasseDiagram& d, const std::vector<bool>* marked = nullptr);

// JSON object {n, count, beta_convention, functions:[{h, beta, dyck,
// catalan_index}...]} as a serialized string.
std::string enumeration_json(int n);

}  // namespace hessideals
