#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dpcolor/bad_cover_search.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/enumerate.hpp"
#include "dpcolor/multigraph.hpp"
#include "dpcolor/solver.hpp"

namespace dpcolor {

/// How exhaustive questions over all covers are answered.
enum class CoverStrategy {
  Search,     // adversarial bad-cover search (default)
  Enumerate,  // gauge-fixed enumeration of maximal covers, each solved
  Auto,       // Enumerate when it visits at most auto_enumeration_limit covers, else Search
};

struct ChromaticOptions {
  CoverStrategy strategy = CoverStrategy::Auto;
  std::uint64_t auto_enumeration_limit = 200'000;
  BadCoverSearchOptions search;
  EnumerationOptions enumeration;
  SolveOptions solve;
};

/// An uncolorable cover with the given list sizes, or nullopt if every such cover is colorable.
inline std::optional<Cover> uncolorable_cover(const Multigraph& g, std::span<const int> sizes, const ChromaticOptions& opts = {}) {
  for (int s : sizes)
    if (s == 0) return Cover(g, std::vector<int>(sizes.begin(), sizes.end()));
  CoverStrategy strategy = opts.strategy;
  if (strategy == CoverStrategy::Auto) {
    // Building a pair's choice table costs up to 2^(|L(u)||L(v)|), so only small
    // pairs are counted at all; pairs with thousands of choices go to Search.
    strategy = CoverStrategy::Search;
    bool small = true;
    for (const auto& e : g.edges()) small = small && sizes[e.u - 1] * sizes[e.v - 1] <= 16;
    EnumerationOptions probe = opts.enumeration;
    probe.caps.max_pair_choices = std::min<std::uint64_t>(probe.caps.max_pair_choices, 5000);
    try {
      if (small && count_covers(g, sizes, probe, opts.auto_enumeration_limit + 1) <= opts.auto_enumeration_limit)
        strategy = CoverStrategy::Enumerate;
    } catch (const ResourceError&) {
    }
  }
  if (strategy == CoverStrategy::Search) {
    auto found = find_uncolorable_cover(g, sizes, opts.search);
    if (found) return saturate(*found);
    return std::nullopt;
  }
  std::optional<Cover> witness;
  SolveOptions so = opts.solve;
  so.trusted = true;
  for_each_cover(g, sizes, opts.enumeration, [&](const Cover& c) {
    if (solve(c, so).colorable()) return true;
    witness = c;
    return false;
  });
  return witness;
}

/// Subgraph left after repeatedly deleting vertices of degree < k.
inline Multigraph k_core(const Multigraph& g, int k) {
  std::vector<bool> gone(g.order() + 1, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (gone[v]) continue;
      int d = 0;
      for (const auto& [u, m] : g.incident(v))
        if (!gone[u]) d += m;
      if (d < k) {
        gone[v] = true;
        changed = true;
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return g.induced(keep);
}

/// True iff G is (L,H)-colorable for every cover with all lists of size k.
/// Lists of size degeneracy+1 always admit a greedy coloring, so no search is needed there.
inline bool dp_colorable_with(const Multigraph& g, int k, const ChromaticOptions& opts = {}) {
  if (k < 0) throw std::invalid_argument("list size must be nonnegative");
  if (g.order() == 0) return true;
  if (k >= degeneracy(g) + 1) return true;
  // Vertices of degree < k can always be colored last, so only the k-core matters.
  const Multigraph core = k_core(g, k);
  if (core.order() == 0) return true;
  std::vector<int> sizes(core.order(), k);
  return !uncolorable_cover(core, sizes, opts).has_value();
}

/// DP-chromatic number: least k such that every cover with lists of size k is colorable.
inline int chi_dp(const Multigraph& g, const ChromaticOptions& opts = {}) {
  if (g.order() == 0) return 0;
  const int upper = degeneracy(g) + 1;
  for (int k = 1; k < upper; ++k)
    if (dp_colorable_with(g, k, opts)) return k;
  return upper;
}

struct OracleResult {
  bool degree_colorable = false;
  std::optional<Cover> witness;  // uncolorable degree cover, present iff !degree_colorable
};

/// Exhaustive ground truth for DP-degree-colorability of a connected multigraph.
inline OracleResult degree_colorable_oracle(const Multigraph& g, const ChromaticOptions& opts = {}) {
  if (!is_connected(g)) throw std::invalid_argument("degree_colorable_oracle: graph must be connected");
  std::vector<int> sizes;
  int total = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    sizes.push_back(g.degree(v));
    total += sizes.back();
  }
  if (opts.strategy == CoverStrategy::Enumerate && total > opts.enumeration.caps.max_degree_sum)
    throw ResourceError("degree sum " + std::to_string(total) + " exceeds the enumeration cap");
  OracleResult r;
  r.witness = uncolorable_cover(g, sizes, opts);
  r.degree_colorable = !r.witness.has_value();
  return r;
}

}  // namespace dpcolor
