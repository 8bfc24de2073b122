#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/multigraph.hpp"

namespace dpcolor {

struct EnumerationCaps {
  int max_degree_sum = 24;                    // degree covers only
  std::uint64_t max_pair_choices = 10'000'000;  // bipartite graphs per vertex pair
};

struct EnumerationOptions {
  /// Only edge-maximal cross-edge sets: no edge can be added without some color
  /// exceeding e_G(u,v) neighbours. Every cover lies below a maximal one and adding
  /// edges never creates a coloring, so maximal covers suffice for uncolorability.
  bool maximal_only = true;
  EnumerationCaps caps;
};

/// A bipartite graph between L(u) (rows) and L(v) (columns); rows[i] is the column mask of row i.
using BipartiteRows = std::vector<std::uint32_t>;

namespace detail {

inline std::uint32_t column_mask(const BipartiteRows& rows, int col) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if ((rows[i] >> col) & 1u) m |= 1u << i;
  return m;
}

/// Column order key: lexicographic on (row 1, row 2, ...) membership.
inline std::uint32_t column_key(std::uint32_t mask, int rows) {
  std::uint32_t key = 0;
  for (int i = 0; i < rows; ++i)
    if ((mask >> i) & 1u) key |= 1u << (rows - 1 - i);
  return key;
}

}  // namespace detail

/// All bipartite graphs between `rows` and `cols` vertices with maximum degree <= cap.
/// `maximal`: keep only edge-maximal ones. `columns_sorted`: keep one representative per
/// orbit under column permutations (columns in non-increasing lexicographic order).
inline std::vector<BipartiteRows> enumerate_bipartite(int rows, int cols, int cap, bool maximal, bool columns_sorted,
                                                       std::uint64_t limit = 10'000'000) {
  if (rows < 0 || cols < 0 || rows > 32 || cols > 32) throw ResourceError("list size outside the supported range 0..32");
  std::vector<BipartiteRows> out;
  BipartiteRows current(rows, 0);
  std::vector<int> col_deg(cols, 0);

  auto accept = [&]() {
    if (maximal) {
      for (int i = 0; i < rows; ++i) {
        if (std::popcount(current[i]) >= cap) continue;
        for (int j = 0; j < cols; ++j)
          if (!((current[i] >> j) & 1u) && col_deg[j] < cap) return;
      }
    }
    if (columns_sorted) {
      std::uint32_t prev = 0;
      for (int j = 0; j < cols; ++j) {
        std::uint32_t key = detail::column_key(detail::column_mask(current, j), rows);
        if (j > 0 && key > prev) return;
        prev = key;
      }
    }
    if (out.size() >= limit) throw ResourceError("per-pair cover choices exceed the configured cap");
    out.push_back(current);
  };

  std::function<void(int)> row_step = [&](int i) {
    if (i == rows) {
      accept();
      return;
    }
    const int remaining_rows = rows - i - 1;
    // Subsets of available columns, size <= cap.
    std::uint32_t avail = 0;
    for (int j = 0; j < cols; ++j)
      if (col_deg[j] < cap) avail |= 1u << j;
    for (std::uint32_t sub = avail;; sub = (sub - 1) & avail) {
      if (std::popcount(sub) <= cap) {
        bool ok = true;
        if (maximal && std::popcount(sub) < cap) {
          // Every column this row skips must still be able to fill up later.
          for (int j = 0; j < cols && ok; ++j)
            if (!((sub >> j) & 1u)) ok = (cap - col_deg[j]) <= remaining_rows;
        }
        if (ok) {
          current[i] = sub;
          for (int j = 0; j < cols; ++j)
            if ((sub >> j) & 1u) ++col_deg[j];
          row_step(i + 1);
          for (int j = 0; j < cols; ++j)
            if ((sub >> j) & 1u) --col_deg[j];
          current[i] = 0;
        }
      }
      if (sub == 0) break;
    }
  };
  row_step(0);
  return out;
}

namespace detail {

struct CoverStep {
  Vertex row, col;  // row = earlier vertex
  const std::vector<BipartiteRows>* choices;
};

class CoverSteps {
 public:
  CoverSteps(const Multigraph& g, std::span<const int> sizes, const EnumerationOptions& opts) : opts_(opts) {
    const int n = g.order();
    if (static_cast<int>(sizes.size()) != n) throw std::invalid_argument("one list size per vertex required");
    std::vector<int> pos(n + 1, -1);
    int placed = 0;
    for (Vertex root = 1; root <= n; ++root) {
      if (pos[root] >= 0) continue;
      std::vector<Vertex> queue{root};
      pos[root] = placed++;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex p = queue[head];
        for (const auto& [v, k] : g.incident(p)) {
          if (pos[v] >= 0) continue;
          pos[v] = placed++;
          queue.push_back(v);
          steps.push_back({p, v, choices_for(sizes[p - 1], sizes[v - 1], k, true)});
          for (const auto& [u, ku] : g.incident(v))
            if (u != p && pos[u] >= 0) steps.push_back({u, v, choices_for(sizes[u - 1], sizes[v - 1], ku, false)});
        }
      }
    }
  }

  std::vector<CoverStep> steps;

 private:
  const std::vector<BipartiteRows>* choices_for(int rows, int cols, int cap, bool sorted) {
    auto key = std::make_tuple(rows, cols, cap, sorted);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, enumerate_bipartite(rows, cols, cap, opts_.maximal_only, sorted, opts_.caps.max_pair_choices)).first;
    return &it->second;
  }

  const EnumerationOptions& opts_;
  std::map<std::tuple<int, int, int, bool>, std::vector<BipartiteRows>> cache_;
};

}  // namespace detail

/// Number of covers for_each_cover would visit, saturating at `cap`.
inline std::uint64_t count_covers(const Multigraph& g, std::span<const int> sizes, const EnumerationOptions& opts, std::uint64_t cap) {
  for (int s : sizes)
    if (s == 0) return 1;
  detail::CoverSteps cs(g, sizes, opts);
  std::uint64_t total = 1;
  for (const auto& s : cs.steps) {
    const std::uint64_t c = s.choices->size();
    if (c == 0) return 0;
    if (total > cap / c) return cap;
    total *= c;
  }
  return std::min(total, cap);
}

/// Visits covers of `g` with the given list sizes up to gauge equivalence.
///
/// Pairs are processed in BFS order from the lowest vertex of each component. When
/// vertex v is reached through tree edge (p,v), colors of v are still free to
/// permute, so that pair is restricted to column-sorted representatives; every
/// other pair at v is enumerated in full. Residual symmetry is not quotiented.
/// `visit` returns false to stop. Returns the number of covers visited.
inline std::uint64_t for_each_cover(const Multigraph& g, std::span<const int> sizes, const EnumerationOptions& opts,
                                    const std::function<bool(const Cover&)>& visit) {
  detail::CoverSteps cs(g, sizes, opts);
  const auto& steps = cs.steps;

  std::uint64_t visited = 0;
  std::vector<std::size_t> pick(steps.size(), 0);
  for (const auto& s : steps)
    if (s.choices->empty()) return 0;
  std::vector<int> sz(sizes.begin(), sizes.end());
  while (true) {
    Cover c(g, sz);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const BipartiteRows& rows = (*steps[i].choices)[pick[i]];
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::uint32_t m = rows[a]; m != 0; m &= m - 1)
          c.add_cross_edge(steps[i].row, static_cast<int>(a + 1), steps[i].col, std::countr_zero(m) + 1);
    }
    ++visited;
    if (!visit(c)) return visited;
    // Odometer, last step fastest.
    std::size_t i = steps.size();
    while (i > 0) {
      --i;
      if (++pick[i] < steps[i].choices->size()) break;
      pick[i] = 0;
      if (i == 0) return visited;
    }
    if (steps.empty()) return visited;
  }
}

/// Degree covers (|L(v)| = deg_G(v)) of a connected multigraph, up to gauge.
inline std::uint64_t enumerate_degree_covers(const Multigraph& g, const EnumerationOptions& opts,
                                             const std::function<bool(const Cover&)>& visit) {
  if (!is_connected(g)) throw std::invalid_argument("enumerate_degree_covers: graph must be connected");
  std::vector<int> sizes;
  int total = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    sizes.push_back(g.degree(v));
    total += sizes.back();
  }
  if (total > opts.caps.max_degree_sum) throw ResourceError("degree sum " + std::to_string(total) + " exceeds the enumeration cap");
  return for_each_cover(g, sizes, opts, visit);
}

inline std::vector<Cover> degree_covers(const Multigraph& g, const EnumerationOptions& opts = {}) {
  std::vector<Cover> out;
  enumerate_degree_covers(g, opts, [&](const Cover& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

/// Random cover: for each pair, cells in random order, each added while both
/// endpoints have spare capacity (the result is edge-maximal).
template <class Rng>
Cover random_cover(const Multigraph& g, std::span<const int> sizes, Rng& rng) {
  Cover c(g, std::vector<int>(sizes.begin(), sizes.end()));
  for (const auto& e : g.edges()) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= sizes[e.u - 1]; ++i)
      for (int j = 1; j <= sizes[e.v - 1]; ++j) cells.emplace_back(i, j);
    std::shuffle(cells.begin(), cells.end(), rng);
    std::vector<int> du(sizes[e.u - 1] + 1, 0), dv(sizes[e.v - 1] + 1, 0);
    for (auto [i, j] : cells)
      if (du[i] < e.multiplicity && dv[j] < e.multiplicity) {
        c.add_cross_edge(e.u, i, e.v, j);
        ++du[i];
        ++dv[j];
      }
  }
  return c;
}

template <class Rng>
Cover random_degree_cover(const Multigraph& g, Rng& rng) {
  std::vector<int> sizes;
  for (Vertex v = 1; v <= g.order(); ++v) sizes.push_back(g.degree(v));
  return random_cover(g, sizes, rng);
}

/// Random per-vertex permutations (gauge transformation) suitable for relabel_colors.
template <class Rng>
std::vector<std::vector<int>> random_gauge(const Cover& c, Rng& rng) {
  std::vector<std::vector<int>> perms;
  for (Vertex v = 1; v <= c.order(); ++v) {
    std::vector<int> p(c.list_size(v));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    perms.push_back(std::move(p));
  }
  return perms;
}

}  // namespace dpcolor
