#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/multigraph.hpp"

namespace dpcolor {

enum class BlockKind { CompletePower, CyclePower, Other };

/// Shape of a block: K_n^k, C_n^k (n >= 4) or neither. `n`/`k` are zero for Other.
struct BlockClass {
  BlockKind kind = BlockKind::Other;
  int n = 0;
  int k = 0;

  friend bool operator==(const BlockClass&, const BlockClass&) = default;
};

inline std::string to_string(const BlockClass& c) {
  switch (c.kind) {
    case BlockKind::CompletePower:
      return "K" + std::to_string(c.n) + "^" + std::to_string(c.k);
    case BlockKind::CyclePower:
      return "C" + std::to_string(c.n) + "^" + std::to_string(c.k);
    case BlockKind::Other:
      break;
  }
  return "Other";
}

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;  // each sorted; ordered by smallest vertex
  std::vector<Vertex> cut_vertices;         // sorted
  std::vector<BlockClass> classification;   // parallel to `blocks`
};

namespace detail {

/// Biconnected components of the underlying simple graph (Hopcroft-Tarjan with an edge stack).
/// Isolated vertices come back as singleton blocks.
inline std::vector<std::vector<Vertex>> biconnected_vertex_sets(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> disc(n + 1, 0), low(n + 1, 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  std::vector<std::vector<Vertex>> result;
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = ++timer;
    for (const auto& [u, k] : g.incident(v)) {
      if (u == parent) continue;
      if (disc[u] == 0) {
        edge_stack.emplace_back(v, u);
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          std::set<Vertex> comp;
          while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            comp.insert(a);
            comp.insert(b);
            if (a == v && b == u) break;
          }
          result.emplace_back(comp.begin(), comp.end());
        }
      } else if (disc[u] < disc[v]) {
        edge_stack.emplace_back(v, u);
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };

  for (Vertex v = 1; v <= n; ++v) {
    if (disc[v] != 0) continue;
    if (g.incident(v).empty()) {
      disc[v] = ++timer;
      result.push_back({v});
      continue;
    }
    dfs(v, 0);
  }
  std::sort(result.begin(), result.end());
  return result;
}

inline bool is_biconnected_or_small(const Multigraph& b) {
  const int n = b.order();
  if (n == 0) return false;
  if (n == 1) return true;
  if (!is_connected(b)) return false;
  if (n == 2) return true;
  return biconnected_vertex_sets(b).size() == 1;
}

}  // namespace detail

/// Recognises K_n^k and C_n^k (n >= 4). C_3^k is reported as K_3^k, a single vertex as K_1^1.
inline BlockClass classify_block(const Multigraph& b) {
  if (!detail::is_biconnected_or_small(b)) throw std::invalid_argument("classify_block: input is not a block");
  const int n = b.order();
  if (n == 1) return {BlockKind::CompletePower, 1, 1};
  const auto edges = b.edges();
  const int k = edges.front().multiplicity;
  const bool uniform = std::all_of(edges.begin(), edges.end(), [k](const WeightedEdge& e) { return e.multiplicity == k; });
  if (!uniform) return {};
  if (static_cast<int>(edges.size()) == n * (n - 1) / 2) return {BlockKind::CompletePower, n, k};
  if (n >= 4 && static_cast<int>(edges.size()) == n) {
    bool two_regular = true;
    for (Vertex v = 1; v <= n; ++v) two_regular = two_regular && b.incident(v).size() == 2;
    // A connected 2-regular simple graph is a cycle.
    if (two_regular) return {BlockKind::CyclePower, n, k};
  }
  return {};
}

/// Blocks of G (computed on the underlying simple graph; multiplicities ride along).
inline BlockDecomposition blocks(const Multigraph& g) {
  if (g.empty()) throw std::invalid_argument("blocks: empty multigraph");
  BlockDecomposition out;
  out.blocks = detail::biconnected_vertex_sets(g);
  std::vector<int> count(g.order() + 1, 0);
  for (const auto& blk : out.blocks)
    for (Vertex v : blk) ++count[v];
  for (Vertex v = 1; v <= g.order(); ++v)
    if (count[v] > 1) out.cut_vertices.push_back(v);
  for (const auto& blk : out.blocks) out.classification.push_back(classify_block(g.induced(blk)));
  return out;
}

/// Vertices of a cycle block in cyclic order starting at its smallest vertex,
/// continuing towards the smaller of the two neighbours.
inline std::vector<Vertex> cycle_order(const Multigraph& g, const std::vector<Vertex>& cycle_vertices) {
  std::set<Vertex> members(cycle_vertices.begin(), cycle_vertices.end());
  auto next_in_block = [&](Vertex v, Vertex prev) {
    for (const auto& [u, k] : g.incident(v))
      if (u != prev && members.count(u)) return u;
    throw std::invalid_argument("cycle_order: vertex set is not a cycle");
  };
  std::vector<Vertex> order{*members.begin()};
  Vertex prev = 0;
  while (order.size() < members.size()) {
    Vertex nxt = next_in_block(order.back(), prev);
    prev = order.back();
    order.push_back(nxt);
  }
  return order;
}

}  // namespace dpcolor
