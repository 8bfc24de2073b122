#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "dpcolor/multigraph.hpp"

namespace dpcolor {

/// Upper-triangle multiplicities (row-major, u < v) under a vertex order.
using GraphCode = std::vector<int>;

namespace detail {

/// Isomorphism-invariant ordered partition of the vertices (0-based) by iterated
/// refinement on (degree, neighbour-cell multiset).
inline std::vector<std::vector<int>> refined_cells(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> cell(n, 0);
  int cells = 1;
  while (true) {
    std::vector<std::pair<std::vector<long long>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<long long> s{cell[v], g.degree(v + 1)};
      std::vector<long long> nb;
      for (const auto& [u, k] : g.incident(v + 1)) nb.push_back(static_cast<long long>(cell[u - 1]) * 1000 + k);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<long long>, int> ids;
    for (const auto& [s, v] : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) cell[v] = ids[sig[v].first];
    if (next == cells) break;
    cells = next;
  }
  std::vector<std::vector<int>> out(cells);
  for (int v = 0; v < n; ++v) out[cell[v]].push_back(v);
  return out;
}

}  // namespace detail

/// Canonical code: the lexicographically largest upper-triangle code over all vertex
/// orders that list the refined cells in order (exhaustive within cells).
inline GraphCode canonical_code(const Multigraph& g) {
  const int n = g.order();
  auto cells = detail::refined_cells(g);
  std::vector<int> perm;  // position -> vertex (0-based)
  for (const auto& c : cells) perm.insert(perm.end(), c.begin(), c.end());
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) mult[e.u - 1][e.v - 1] = mult[e.v - 1][e.u - 1] = e.multiplicity;

  GraphCode best, cur(n * (n - 1) / 2);
  std::vector<std::size_t> starts;
  std::size_t pos = 0;
  for (const auto& c : cells) {
    starts.push_back(pos);
    pos += c.size();
  }
  std::function<void(std::size_t)> permute_cell = [&](std::size_t ci) {
    if (ci == cells.size()) {
      std::size_t idx = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cur[idx++] = mult[perm[i]][perm[j]];
      if (best.empty() || cur > best) best = cur;
      return;
    }
    auto first = perm.begin() + static_cast<std::ptrdiff_t>(starts[ci]);
    auto last = first + static_cast<std::ptrdiff_t>(cells[ci].size());
    std::sort(first, last);
    do {
      permute_cell(ci + 1);
    } while (std::next_permutation(first, last));
  };
  permute_cell(0);
  return best;
}

inline Multigraph graph_from_code(int n, const GraphCode& code) {
  Multigraph g(n);
  std::size_t idx = 0;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (int k = code.at(idx++); k > 0) g.set_multiplicity(u, v, k);
  return g;
}

inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

/// Connected multigraphs on exactly n vertices with multiplicities in 1..max_mult,
/// one per isomorphism class, in decreasing canonical-code order. Brute force; n <= 5.
inline std::vector<Multigraph> connected_multigraphs(int n, int max_mult) {
  if (n < 1 || n > 5 || max_mult < 1) throw std::invalid_argument("connected_multigraphs: supports 1 <= n <= 5, max_mult >= 1");
  const int pairs = n * (n - 1) / 2;
  std::set<GraphCode, std::greater<>> seen;
  GraphCode code(pairs, 0);
  while (true) {
    Multigraph g = graph_from_code(n, code);
    if (is_connected(g)) seen.insert(canonical_code(g));
    int i = 0;
    while (i < pairs && code[i] == max_mult) code[i++] = 0;
    if (i == pairs) break;
    ++code[i];
  }
  std::vector<Multigraph> out;
  for (const auto& c : seen) out.push_back(graph_from_code(n, c));
  return out;
}

/// Connected simple graphs on exactly n vertices with maximum degree <= max_degree,
/// one per isomorphism class. Every connected graph has a vertex whose removal leaves
/// it connected, so extending the (n-1)-vertex classes by one vertex reaches all of them.
inline std::vector<Multigraph> connected_simple_graphs(int n, int max_degree = INT_MAX) {
  if (n < 1 || n > 10) throw std::invalid_argument("connected_simple_graphs: supports 1 <= n <= 10");
  std::vector<Multigraph> level{Multigraph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<GraphCode, std::greater<>> seen;
    for (const auto& parent : level) {
      const int p = parent.order();
      for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
        Multigraph g(m);
        for (const auto& e : parent.edges()) g.set_multiplicity(e.u, e.v, 1);
        bool ok = std::popcount(mask) <= max_degree;
        for (int u = 0; u < p && ok; ++u)
          if ((mask >> u) & 1u) {
            g.set_multiplicity(u + 1, m, 1);
            ok = g.degree(u + 1) <= max_degree;
          }
        if (ok) seen.insert(canonical_code(g));
      }
    }
    level.clear();
    for (const auto& c : seen) level.push_back(graph_from_code(m, c));
  }
  return level;
}

}  // namespace dpcolor
