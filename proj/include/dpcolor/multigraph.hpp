#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/error.hpp"

namespace dpcolor {

/// Vertices are numbered 1..n.
using Vertex = int;

struct WeightedEdge {
  Vertex u;
  Vertex v;
  int multiplicity;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Loopless multigraph on vertices 1..n. Only pairs with multiplicity >= 1 are stored.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : adj_(check_order(n)) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  bool empty() const noexcept { return adj_.empty(); }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= order(); }

  /// e_G(u,v); zero for non-adjacent pairs.
  int multiplicity(Vertex u, Vertex v) const {
    check_pair(u, v);
    const auto& row = adj_[u - 1];
    auto it = row.find(v);
    return it == row.end() ? 0 : it->second;
  }

  bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }

  /// Sets e_G(u,v) = k; k = 0 removes the pair.
  Multigraph& set_multiplicity(Vertex u, Vertex v, int k) {
    check_pair(u, v);
    if (k < 0) throw std::invalid_argument("negative multiplicity");
    if (k == 0) {
      adj_[u - 1].erase(v);
      adj_[v - 1].erase(u);
    } else {
      adj_[u - 1][v] = k;
      adj_[v - 1][u] = k;
    }
    return *this;
  }

  Multigraph& add_edges(Vertex u, Vertex v, int k = 1) { return set_multiplicity(u, v, multiplicity(u, v) + k); }

  /// Neighbours of v in increasing order, with multiplicities.
  const std::map<Vertex, int>& incident(Vertex v) const {
    check_vertex(v);
    return adj_[v - 1];
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& [u, k] : incident(v)) out.push_back(u);
    return out;
  }

  int degree(Vertex v) const {
    int d = 0;
    for (const auto& [u, k] : incident(v)) d += k;
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 1; v <= order(); ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Pairs u < v with their multiplicities, lexicographic.
  std::vector<WeightedEdge> edges() const {
    std::vector<WeightedEdge> out;
    for (Vertex u = 1; u <= order(); ++u)
      for (const auto& [v, k] : adj_[u - 1])
        if (u < v) out.push_back({u, v, k});
    return out;
  }

  /// |E(G)| counted with multiplicity.
  int edge_count() const {
    int total = 0;
    for (Vertex v = 1; v <= order(); ++v) total += degree(v);
    return total / 2;
  }

  int pair_count() const {
    int total = 0;
    for (const auto& row : adj_) total += static_cast<int>(row.size());
    return total / 2;
  }

  bool is_simple() const {
    for (const auto& row : adj_)
      for (const auto& [v, k] : row)
        if (k != 1) return false;
    return true;
  }

  /// Sub-multigraph induced by `vertices`; vertex vertices[i] becomes i+1.
  Multigraph induced(const std::vector<Vertex>& vertices) const {
    Multigraph sub(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (int k = multiplicity(vertices[i], vertices[j]); k > 0)
          sub.set_multiplicity(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1), k);
    return sub;
  }

  /// Underlying simple graph: every multiplicity clipped to 1.
  Multigraph underlying_simple() const {
    Multigraph g(order());
    for (const auto& e : edges()) g.set_multiplicity(e.u, e.v, 1);
    return g;
  }

  /// Image under the relabelling v -> perm[v-1].
  Multigraph relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != order()) throw std::invalid_argument("permutation size mismatch");
    Multigraph g(order());
    for (const auto& e : edges()) g.set_multiplicity(perm[e.u - 1], perm[e.v - 1], e.multiplicity);
    return g;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return n;
  }

  void check_vertex(Vertex v) const {
    if (!contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(order()));
  }

  void check_pair(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
  }

  std::vector<std::map<Vertex, int>> adj_;
};

inline int degree(const Multigraph& g, Vertex v) { return g.degree(v); }

/// G^k: every edge replaced by k parallel edges.
inline Multigraph power(const Multigraph& g, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be positive");
  Multigraph out(g.order());
  for (const auto& e : g.edges()) out.set_multiplicity(e.u, e.v, e.multiplicity * k);
  return out;
}

inline Multigraph complete_graph(int n, int k = 1) {
  Multigraph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) g.set_multiplicity(u, v, k);
  return g;
}

/// C_n^k on 1..n with edges {i,i+1} and {1,n}. Requires n >= 3.
inline Multigraph cycle_graph(int n, int k = 1) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Multigraph g(n);
  for (Vertex v = 1; v < n; ++v) g.set_multiplicity(v, v + 1, k);
  g.set_multiplicity(1, n, k);
  return g;
}

inline Multigraph path_graph(int n) {
  Multigraph g(n);
  for (Vertex v = 1; v < n; ++v) g.set_multiplicity(v, v + 1, 1);
  return g;
}

/// Vertices in the order produced by repeatedly deleting a vertex of minimum
/// remaining degree (ties: lowest label). Reversing it gives a greedy order in
/// which every vertex has at most degeneracy(G) earlier neighbours (by multiplicity).
inline std::vector<Vertex> degeneracy_elimination_order(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> deg(n + 1);
  std::vector<bool> removed(n + 1, false);
  for (Vertex v = 1; v <= n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v)
      if (!removed[v] && (best == 0 || deg[v] < deg[best])) best = v;
    removed[best] = true;
    order.push_back(best);
    for (const auto& [u, k] : g.incident(best))
      if (!removed[u]) deg[u] -= k;
  }
  return order;
}

/// Smallest d such that every sub-multigraph has a vertex of degree <= d.
inline int degeneracy(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> deg(n + 1);
  for (Vertex v = 1; v <= n; ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(n + 1, false);
  int result = 0;
  for (Vertex v : degeneracy_elimination_order(g)) {
    result = std::max(result, deg[v]);
    removed[v] = true;
    for (const auto& [u, k] : g.incident(v))
      if (!removed[u]) deg[u] -= k;
  }
  return result;
}

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Multigraph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(g.order() + 1, false);
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& [u, k] : g.incident(v))
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Multigraph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

// ---------------------------------------------------------------------------
// Text format: first line `n`, then `u v k` per adjacent pair.

namespace detail {

/// Splits a stream into (line number, whitespace-separated tokens) for non-blank lines.
inline std::vector<std::pair<int, std::vector<std::string>>> tokenize_lines(std::istream& in) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) out.emplace_back(lineno, std::move(tokens));
  }
  return out;
}

inline long long parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
  if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line);
  return value;
}

}  // namespace detail

inline Multigraph parse_multigraph(std::istream& in) {
  auto lines = detail::tokenize_lines(in);
  if (lines.empty()) throw ParseError("empty multigraph input");
  const auto& [first_line, header] = lines.front();
  if (header.size() != 1) throw ParseError("first line must hold the vertex count", first_line);
  const long long n = detail::parse_int(header[0], first_line);
  if (n < 0 || n > 1'000'000) throw ParseError("vertex count out of range", first_line);
  Multigraph g(static_cast<int>(n));
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [lineno, toks] = lines[i];
    if (toks.size() != 3) throw ParseError("expected `u v k`", lineno);
    const long long u = detail::parse_int(toks[0], lineno);
    const long long v = detail::parse_int(toks[1], lineno);
    const long long k = detail::parse_int(toks[2], lineno);
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex out of range", lineno);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), lineno);
    if (k < 1 || k > 1'000'000) throw ParseError("multiplicity must be a positive integer", lineno);
    const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second) throw ParseError("duplicate pair " + std::to_string(key.first) + " " + std::to_string(key.second), lineno);
    g.set_multiplicity(key.first, key.second, static_cast<int>(k));
  }
  return g;
}

inline Multigraph parse_multigraph(const std::string& text) {
  std::istringstream in(text);
  return parse_multigraph(in);
}

inline void write_multigraph(std::ostream& out, const Multigraph& g) {
  out << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.multiplicity << '\n';
}

inline std::string to_text(const Multigraph& g) {
  std::ostringstream out;
  write_multigraph(out, g);
  return out.str();
}

}  // namespace dpcolor
