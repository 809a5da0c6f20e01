#include "hessideals/hessenberg.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hessideals {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    // trim spaces
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument(std::string(what) + ": empty entry in '" + text + "'");
    token = token.substr(b, e - b + 1);
    try {
      size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing junk");
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": could not parse entry '" + token +
                                  "' in '" + text + "'");
    }
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": no entries in '" + text + "'");
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n == 0) throw std::invalid_argument("Hessenberg function: empty value list");
  for (int i = 1; i <= n; ++i) {
    const int v = values_[i - 1];
    if (v < i || v > n) {
      std::ostringstream os;
      os << "Hessenberg function: rule (a) violated at i=" << i << ": h_" << i << "=" << v
         << " must satisfy " << i << " <= h_" << i << " <= " << n;
      throw std::invalid_argument(os.str());
    }
  }
  for (int i = 1; i < n; ++i) {
    if (values_[i - 1] > values_[i]) {
      std::ostringstream os;
      os << "Hessenberg function: rule (b) violated at i=" << i << ": h_" << i << "="
         << values_[i - 1] << " > h_" << (i + 1) << "=" << values_[i];
      throw std::invalid_argument(os.str());
    }
  }
}

HessenbergFunction HessenbergFunction::parse(const std::string& text) {
  return HessenbergFunction(parse_int_list(text, "Hessenberg function"));
}

int HessenbergFunction::at(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("HessenbergFunction::at: index out of range");
  return values_[i - 1];
}

std::string HessenbergFunction::to_string() const { return join_ints(values_); }

bool leq_pointwise(const HessenbergFunction& a, const HessenbergFunction& b) {
  if (a.n() != b.n()) throw std::invalid_argument("leq_pointwise: size mismatch");
  for (int i = 0; i < a.n(); ++i)
    if (a.values()[i] > b.values()[i]) return false;
  return true;
}

DegreeTuple::DegreeTuple(std::vector<int> ascending) : beta_(std::move(ascending)) {
  const int n = static_cast<int>(beta_.size());
  if (n == 0) throw std::invalid_argument("degree tuple: empty value list");
  for (int i = 1; i <= n; ++i) {
    const int v = beta_[i - 1];
    if (v < 1 || v > i) {
      std::ostringstream os;
      os << "degree tuple: rule (a') violated at i=" << i << ": beta_" << i << "=" << v
         << " outside [1, " << i << "]";
      throw std::invalid_argument(os.str());
    }
  }
  for (int i = 2; i <= n; ++i) {
    if (beta_[i - 1] - beta_[i - 2] > 1) {
      std::ostringstream os;
      os << "degree tuple: rule (b') violated at i=" << i << ": beta_" << i << " - beta_"
         << (i - 1) << " = " << (beta_[i - 1] - beta_[i - 2]) << " > 1";
      throw std::invalid_argument(os.str());
    }
  }
}

int DegreeTuple::at(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("DegreeTuple::at: index out of range");
  return beta_[i - 1];
}

std::vector<int> DegreeTuple::descending() const {
  std::vector<int> out(beta_.rbegin(), beta_.rend());
  return out;
}

std::string DegreeTuple::to_string() const { return join_ints(beta_); }

DegreeTuple to_degree_tuple(const HessenbergFunction& h) {
  const int n = h.n();
  std::vector<int> beta(n);
  for (int i = 1; i <= n; ++i) {
    int below = 0;
    for (int k = 1; k <= n; ++k)
      if (h.at(k) < i) ++below;
    beta[i - 1] = i - below;
  }
  return DegreeTuple(std::move(beta));
}

HessenbergFunction from_degree_tuple(const DegreeTuple& b) {
  const int n = b.n();
  // lambda'_i = beta_i + n - i is weakly decreasing by rule (b'); its
  // conjugate, reversed, is the Hessenberg function.
  std::vector<int> conj(n);
  for (int i = 1; i <= n; ++i) conj[i - 1] = b.at(i) + n - i;
  Partition lambda = Partition(std::move(conj), n).conjugate();
  std::vector<int> h(lambda.parts().rbegin(), lambda.parts().rend());
  return HessenbergFunction(std::move(h));
}

Partition::Partition(std::vector<int> parts, int n) : parts_(std::move(parts)), n_(n) {
  if (n <= 0) throw std::invalid_argument("partition: n must be positive");
  if (static_cast<int>(parts_.size()) > n)
    throw std::invalid_argument("partition: more than n parts");
  parts_.resize(n, 0);
  for (int i = 0; i < n; ++i) {
    if (parts_[i] < 0 || parts_[i] > n)
      throw std::invalid_argument("partition: part outside [0, n]");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
}

bool Partition::is_ample() const {
  for (int i = 1; i <= n_; ++i)
    if (parts_[i - 1] < n_ - i + 1) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> conj(n_, 0);
  for (int i = 1; i <= n_; ++i) {
    int count = 0;
    for (int part : parts_)
      if (part >= i) ++count;
    conj[i - 1] = count;
  }
  return Partition(std::move(conj), n_);
}

Partition to_ample_partition(const HessenbergFunction& h) {
  std::vector<int> parts(h.values().rbegin(), h.values().rend());
  return Partition(std::move(parts), h.n());
}

HessenbergFunction from_ample_partition(const Partition& p) {
  if (!p.is_ample())
    throw std::invalid_argument(
        "from_ample_partition: partition does not contain the staircase (n, n-1, ..., 1)");
  std::vector<int> h(p.parts().rbegin(), p.parts().rend());
  return HessenbergFunction(std::move(h));
}

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
  if (steps_.size() % 2 != 0) throw std::invalid_argument("Dyck path: odd number of steps");
  int down = 0, right = 0;
  for (char c : steps_) {
    if (c == 'D')
      ++down;
    else if (c == 'R')
      ++right;
    else
      throw std::invalid_argument(std::string("Dyck path: invalid step '") + c +
                                  "' (expected 'D' or 'R')");
    if (right > down)
      throw std::invalid_argument("Dyck path: prefix rises above the antidiagonal");
  }
  if (down != right) throw std::invalid_argument("Dyck path: unbalanced step counts");
}

DyckPath to_dyck_path(const HessenbergFunction& h) {
  const int n = h.n();
  std::string steps;
  steps.reserve(2 * n);
  int level = n;  // height before column 1
  for (int i = 1; i <= n; ++i) {
    const int target = n - h.at(i);  // path height under column i
    for (; level > target; --level) steps.push_back('D');
    steps.push_back('R');
  }
  for (; level > 0; --level) steps.push_back('D');
  return DyckPath(std::move(steps));
}

HessenbergFunction from_dyck_path(const DyckPath& p) {
  const int n = p.n();
  std::vector<int> h;
  h.reserve(n);
  int level = n;
  for (char c : p.steps()) {
    if (c == 'D')
      --level;
    else
      h.push_back(n - level);
  }
  return HessenbergFunction(std::move(h));
}

namespace {

void enumerate_rec(int n, std::vector<int>& prefix, std::vector<HessenbergFunction>& out) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    out.emplace_back(prefix);
    return;
  }
  const int lo = std::max(i, prefix.empty() ? 1 : prefix.back());
  for (int v = lo; v <= n; ++v) {
    prefix.push_back(v);
    enumerate_rec(n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
  if (n <= 0) throw std::invalid_argument("enumerate_hessenberg: n must be positive");
  std::vector<HessenbergFunction> out;
  std::vector<int> prefix;
  enumerate_rec(n, prefix, out);
  return out;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be nonnegative");
  BigInt c = binomial(2 * n, n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return c;
}

int HasseDiagram::index_of(const HessenbergFunction& h) const {
  const auto it = index.find(h.values());
  if (it == index.end())
    throw std::invalid_argument("HasseDiagram::index_of: vertex not present: " + h.to_string());
  return it->second;
}

int HasseDiagram::source() const { return static_cast<int>(vertices.size()) - 1; }

int HasseDiagram::sink() const { return 0; }

bool HasseDiagram::reachable(int from, int to) const {
  if (from == to) return true;
  std::vector<bool> seen(vertices.size(), false);
  std::deque<int> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : out_neighbors[v]) {
      if (w == to) return true;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return false;
}

HasseDiagram hasse_diagram(int n) {
  HasseDiagram d;
  d.n = n;
  d.vertices = enumerate_hessenberg(n);
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v)
    d.index[d.vertices[v].values()] = v;
  d.out_neighbors.resize(d.vertices.size());
  d.out_edge_ids.resize(d.vertices.size());
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    const std::vector<int>& h = d.vertices[v].values();
    for (int i = 1; i <= n; ++i) {
      // decrementing h_i must keep rule (a) (h_i - 1 >= i) and rule (b)
      // (h_{i-1} <= h_i - 1); rule (b) on the right is automatic.
      if (h[i - 1] - 1 < i) continue;
      if (i > 1 && h[i - 2] > h[i - 1] - 1) continue;
      std::vector<int> target = h;
      --target[i - 1];
      const int w = d.index.at(target);
      const int edge_id = static_cast<int>(d.edges.size());
      d.edges.emplace_back(v, w);
      d.out_neighbors[v].push_back(w);
      d.out_edge_ids[v].push_back(edge_id);
    }
  }
  return d;
}

MaximalChainCount count_maximal_chains(int n) {
  const HasseDiagram d = hasse_diagram(n);
  // Every edge goes to a lex-smaller vertex, so ascending vertex index is a
  // reverse topological order.
  std::vector<BigInt> paths(d.vertices.size(), BigInt(0));
  paths[d.sink()] = 1;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    if (v == d.sink()) continue;
    BigInt total = 0;
    for (int w : d.out_neighbors[v]) total += paths[w];
    paths[v] = total;
  }

  MaximalChainCount out;
  out.dfs = paths[d.source()];

  const BigInt numerator = factorial(n * (n - 1) / 2);
  BigInt denom = 1;
  for (int i = 1; i <= n - 1; ++i) {
    BigInt base = 2 * i - 1;
    mpz_pow_ui(base.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - i));
    denom *= base;
  }
  if (mpz_divisible_p(numerator.get_mpz_t(), denom.get_mpz_t())) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denom.get_mpz_t());
    out.product_formula = q;
  } else {
    out.product_formula = 0;
  }
  out.product_matches = (out.product_formula == out.dfs && out.product_formula != 0) ||
                        (out.dfs == 0 && out.product_formula == 0);

  BigInt flat_denom = 1;
  for (int i = 1; i <= n - 1; ++i) {
    BigInt base = 2 * i - 1;
    mpz_pow_ui(base.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - 1));
    flat_denom *= base;
  }
  out.flat_exponent_formula = Rational(numerator) / Rational(flat_denom);
  out.flat_matches = (out.flat_exponent_formula == Rational(out.dfs));
  return out;
}

std::vector<std::string> hessenberg_diagram(const HessenbergFunction& h) {
  const int n = h.n();
  std::vector<std::string> rows(n, std::string(n, '.'));
  for (int r = 1; r <= n; ++r)
    for (int i = 1; i <= n; ++i)
      if (i <= r && r <= h.at(i)) rows[r - 1][i - 1] = '#';
  return rows;
}

std::string hasse_to_dot(const HasseDiagram& d, const std::vector<bool>* marked) {
  if (marked && marked->size() != d.edges.size())
    throw std::invalid_argument("hasse_to_dot: marked vector size must match edge count");
  std::ostringstream os;
  os << "digraph hessenberg_order {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& v : d.vertices) os << "  \"" << v.to_string() << "\";\n";
  for (size_t e = 0; e < d.edges.size(); ++e) {
    const auto& [from, to] = d.edges[e];
    os << "  \"" << d.vertices[from].to_string() << "\" -> \"" << d.vertices[to].to_string()
       << "\"";
    if (marked && (*marked)[e]) os << " [style=dashed, color=\"black:invis:black\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string enumeration_json(int n) {
  const auto all = enumerate_hessenberg(n);
  nlohmann::json j;
  j["n"] = n;
  const BigInt count = catalan(n);
  if (count.fits_ulong_p())
    j["count"] = static_cast<std::uint64_t>(count.get_ui());
  else
    j["count"] = count.get_str();
  j["beta_convention"] = "ascending by index (beta_1, ..., beta_n)";
  nlohmann::json fns = nlohmann::json::array();
  for (size_t k = 0; k < all.size(); ++k) {
    nlohmann::json f;
    f["catalan_index"] = k;
    f["h"] = all[k].values();
    f["beta"] = to_degree_tuple(all[k]).ascending();
    f["dyck"] = to_dyck_path(all[k]).steps();
    fns.push_back(std::move(f));
  }
  j["functions"] = std::move(fns);
  return j.dump(2);
}

}  // namespace hessideals
