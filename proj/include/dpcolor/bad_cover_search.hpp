#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/multigraph.hpp"

namespace dpcolor {

struct BadCoverSearchOptions {
  std::uint64_t node_budget = 2'000'000'000ULL;
};

struct BadCoverSearchStats {
  std::uint64_t nodes = 0;
};

namespace detail {

/// Searches for cross edges that leave no independent transversal.
///
/// Every node looks at the independent transversals of the partial cover. Each of
/// them must eventually be killed by one cross edge between two of its colors, and
/// only edges that are neither forbidden nor over capacity qualify. A transversal
/// with no qualifying edge closes the branch; otherwise we branch on the transversal
/// with the fewest, adding its i-th edge after forbidding the first i-1 (so no cover
/// is reached twice). Colors never touched by an edge or a prohibition are
/// interchangeable, so transversals only use the lowest untouched color of each list.
class BadCoverSearch {
 public:
  static constexpr int kMaxListSize = 32;

  BadCoverSearch(const Multigraph& g, std::span<const int> sizes, const BadCoverSearchOptions& opts)
      : g_(g), n_(g.order()), budget_(opts.node_budget) {
    if (static_cast<int>(sizes.size()) != n_) throw std::invalid_argument("one list size per vertex required");
    size_.assign(sizes.begin(), sizes.end());
    for (int s : size_)
      if (s < 0 || s > kMaxListSize) throw ResourceError("list size outside the supported range 0..32");
    offset_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + size_[v];
    edge_.assign(static_cast<std::size_t>(offset_[n_]) * n_, 0);
    forb_ = edge_;
    involve_.assign(offset_[n_], 0);
    for (const auto& e : g.edges()) pairs_.push_back({e.u - 1, e.v - 1, e.multiplicity});
    allowed_.assign(n_, 0);
    order_ = traversal_order();
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
    earlier_.assign(n_, {});
    for (const auto& p : pairs_) {
      if (pos[p.u] < pos[p.v]) earlier_[p.v].push_back(p.u);
      else earlier_[p.u].push_back(p.v);
    }
  }

  std::optional<Cover> run() {
    for (int s : size_)
      if (s == 0) return to_cover();  // an empty list can never be colored
    if (search()) return to_cover();
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct Pair {
    int u, v, e;
  };
  struct Option {
    int u, a, v, b;  // 0-based vertices and color bits
  };

  std::uint32_t& edge_mask(int u, int a, int v) { return edge_[static_cast<std::size_t>(offset_[u] + a) * n_ + v]; }
  std::uint32_t& forb_mask(int u, int a, int v) { return forb_[static_cast<std::size_t>(offset_[u] + a) * n_ + v]; }

  std::vector<int> traversal_order() const {
    // BFS from the highest-degree vertex of each component, so every vertex after
    // the first has an earlier neighbour to prune against.
    std::vector<int> order;
    std::vector<bool> seen(n_, false);
    while (static_cast<int>(order.size()) < n_) {
      int start = -1;
      for (int v = 0; v < n_; ++v)
        if (!seen[v] && (start < 0 || g_.degree(v + 1) > g_.degree(start + 1))) start = v;
      seen[start] = true;
      std::size_t head = order.size();
      order.push_back(start);
      while (head < order.size()) {
        int v = order[head++];
        for (const auto& [u, k] : g_.incident(v + 1))
          if (!seen[u - 1]) {
            seen[u - 1] = true;
            order.push_back(u - 1);
          }
      }
    }
    return order;
  }

  void touch(int v, int a, int delta) { involve_[offset_[v] + a] += delta; }

  void set_edge(const Option& o, bool on) {
    edge_mask(o.u, o.a, o.v) ^= 1u << o.b;
    edge_mask(o.v, o.b, o.u) ^= 1u << o.a;
    touch(o.u, o.a, on ? 1 : -1);
    touch(o.v, o.b, on ? 1 : -1);
  }

  void set_forbidden(const Option& o, bool on) {
    forb_mask(o.u, o.a, o.v) ^= 1u << o.b;
    forb_mask(o.v, o.b, o.u) ^= 1u << o.a;
    touch(o.u, o.a, on ? 1 : -1);
    touch(o.v, o.b, on ? 1 : -1);
  }

  std::uint32_t allowed_colors(int v) const {
    std::uint32_t touched = 0;
    int lowest_free = -1;
    for (int a = 0; a < size_[v]; ++a) {
      if (involve_[offset_[v] + a] > 0) touched |= 1u << a;
      else if (lowest_free < 0) lowest_free = a;
    }
    return lowest_free < 0 ? touched : touched | (1u << lowest_free);
  }

  // Result of scanning the independent transversals of the current partial cover.
  enum class Scan { NoTransversal, Dead, Branch };

  Scan scan() {
    for (int v = 0; v < n_; ++v) allowed_[v] = allowed_colors(v);
    best_count_ = -1;
    best_options_.clear();
    stop_ = false;
    any_ = false;
    choice_.assign(n_, -1);
    enumerate(0);
    if (!any_) return Scan::NoTransversal;
    return best_count_ == 0 ? Scan::Dead : Scan::Branch;
  }

  void enumerate(int depth) {
    if (stop_) return;
    if (depth == n_) {
      any_ = true;
      evaluate_leaf();
      return;
    }
    const int v = order_[depth];
    std::uint32_t cand = allowed_[v];
    for (int u : earlier_[v]) cand &= ~edge_mask(u, choice_[u], v);
    while (cand != 0 && !stop_) {
      const int a = std::countr_zero(cand);
      cand &= cand - 1;
      choice_[v] = a;
      enumerate(depth + 1);
    }
    choice_[v] = -1;
  }

  void evaluate_leaf() {
    scratch_.clear();
    for (const auto& p : pairs_) {
      const int a = choice_[p.u], b = choice_[p.v];
      if ((forb_mask(p.u, a, p.v) >> b) & 1u) continue;
      if (std::popcount(edge_mask(p.u, a, p.v)) >= p.e) continue;
      if (std::popcount(edge_mask(p.v, b, p.u)) >= p.e) continue;
      scratch_.push_back({p.u, a, p.v, b});
    }
    const int count = static_cast<int>(scratch_.size());
    if (best_count_ < 0 || count < best_count_) {
      best_count_ = count;
      best_options_ = scratch_;
      if (count <= 1) stop_ = true;
    }
  }

  bool search() {
    if (++nodes_ > budget_) throw ResourceError("bad-cover search node budget exhausted");
    const Scan s = scan();
    if (s == Scan::NoTransversal) return true;
    if (s == Scan::Dead) return false;
    const std::vector<Option> options = best_options_;
    std::size_t tried = 0;
    bool found = false;
    for (const auto& o : options) {
      set_edge(o, true);
      if (search()) {
        found = true;
        break;
      }
      set_edge(o, false);
      set_forbidden(o, true);
      ++tried;
    }
    for (std::size_t i = 0; i < tried; ++i) set_forbidden(options[i], false);
    return found;
  }

  Cover to_cover() {
    Cover c(g_, std::vector<int>(size_.begin(), size_.end()));
    for (const auto& p : pairs_)
      for (int a = 0; a < size_[p.u]; ++a)
        for (std::uint32_t m = edge_mask(p.u, a, p.v); m != 0; m &= m - 1)
          c.add_cross_edge(p.u + 1, a + 1, p.v + 1, std::countr_zero(m) + 1);
    return c;
  }

  const Multigraph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> size_, offset_;
  std::vector<std::uint32_t> edge_, forb_;
  std::vector<int> involve_;
  std::vector<Pair> pairs_;
  std::vector<int> order_;
  std::vector<std::vector<int>> earlier_;

  // scan state
  std::vector<std::uint32_t> allowed_;
  std::vector<int> choice_;
  std::vector<Option> scratch_, best_options_;
  int best_count_ = -1;
  bool stop_ = false;
  bool any_ = false;
};

}  // namespace detail

/// Finds a cover of `g` with |L(v)| = sizes[v-1] that admits no (L,H)-coloring, or
/// proves that none exists. Exact; throws ResourceError when the node budget runs out.
inline std::optional<Cover> find_uncolorable_cover(const Multigraph& g, std::span<const int> sizes,
                                                   const BadCoverSearchOptions& opts = {}, BadCoverSearchStats* stats = nullptr) {
  detail::BadCoverSearch search(g, sizes, opts);
  auto result = search.run();
  if (stats) stats->nodes = search.nodes();
  return result;
}

/// Adds cross edges (pairs in order, then lexicographic color pairs) until no edge
/// can be added without exceeding some multiplicity. Colorability can only drop.
inline Cover saturate(const Cover& c) {
  Cover out = c;
  for (const auto& e : c.base().edges()) {
    std::vector<int> du(c.list_size(e.u) + 1, 0), dv(c.list_size(e.v) + 1, 0);
    for (auto [i, j] : c.cross_edges(e.u, e.v)) {
      ++du[i];
      ++dv[j];
    }
    for (int i = 1; i <= c.list_size(e.u); ++i)
      for (int j = 1; j <= c.list_size(e.v); ++j)
        if (du[i] < e.multiplicity && dv[j] < e.multiplicity && !out.has_cross_edge({e.u, i}, {e.v, j})) {
          out.add_cross_edge(e.u, i, e.v, j);
          ++du[i];
          ++dv[j];
        }
  }
  return out;
}

}  // namespace dpcolor
