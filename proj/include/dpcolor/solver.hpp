#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/error.hpp"

namespace dpcolor {

struct SolveOptions {
  /// Search nodes allowed before giving up with ResourceError.
  std::uint64_t node_budget = 1'000'000'000ULL;
  /// Skip the up-front validate() call (callers that construct covers themselves).
  bool trusted = false;
};

enum class SolveStatus { Colorable, Uncolorable };

struct SolveResult {
  SolveStatus status = SolveStatus::Uncolorable;
  std::optional<Transversal> coloring;  // present iff Colorable
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds time{0};

  bool colorable() const noexcept { return status == SolveStatus::Colorable; }
};

/// True iff no two chosen colors are joined by a cross edge.
inline bool check_transversal(const Cover& c, const Transversal& t) {
  if (static_cast<int>(t.choice.size()) != c.order()) throw std::invalid_argument("transversal must pick one color per vertex");
  for (Vertex v = 1; v <= c.order(); ++v)
    if (t.at(v) < 1 || t.at(v) > c.list_size(v)) throw std::out_of_range("transversal index outside L(" + std::to_string(v) + ")");
  for (const auto& [pair, edges] : c.cross_map())
    if (edges.count({t.at(pair.first), t.at(pair.second)})) return false;
  return true;
}

namespace detail {

/// Flat color numbering with per-color conflict lists; shared by the exact and greedy solvers.
class ColorGraph {
 public:
  explicit ColorGraph(const Cover& c) : n_(c.order()), offset_(n_ + 1, 0) {
    for (Vertex v = 1; v <= n_; ++v) offset_[v] = offset_[v - 1] + c.list_size(v);
    owner_.resize(offset_[n_]);
    for (Vertex v = 1; v <= n_; ++v)
      for (int x = offset_[v - 1]; x < offset_[v]; ++x) owner_[x] = v;
    conflicts_.resize(offset_[n_]);
    for (const auto& [pair, edges] : c.cross_map())
      for (auto [i, j] : edges) {
        int a = id(pair.first, i), b = id(pair.second, j);
        conflicts_[a].push_back(b);
        conflicts_[b].push_back(a);
      }
  }

  int order() const noexcept { return n_; }
  int colors() const noexcept { return offset_[n_]; }
  int id(Vertex v, int index) const noexcept { return offset_[v - 1] + index - 1; }
  int first(Vertex v) const noexcept { return offset_[v - 1]; }
  int last(Vertex v) const noexcept { return offset_[v]; }
  int size(Vertex v) const noexcept { return offset_[v] - offset_[v - 1]; }
  Vertex owner(int color) const noexcept { return owner_[color]; }
  const std::vector<int>& conflicts(int color) const noexcept { return conflicts_[color]; }

 private:
  int n_;
  std::vector<int> offset_;
  std::vector<Vertex> owner_;
  std::vector<std::vector<int>> conflicts_;
};

/// Chronological backtracking with minimum-remaining-domain vertex choice.
/// blocked_[x] counts committed colors adjacent to x; a color is available iff it is 0.
class TransversalSearch {
 public:
  TransversalSearch(const ColorGraph& g, std::uint64_t budget)
      : g_(g), budget_(budget), blocked_(g.colors(), 0), domain_(g.order() + 1, 0), chosen_(g.order() + 1, 0) {
    for (Vertex v = 1; v <= g.order(); ++v) domain_[v] = g.size(v);
  }

  /// Stops at the first transversal when `count_all` is false; otherwise counts all of them.
  std::uint64_t run(bool count_all) {
    count_all_ = count_all;
    found_ = 0;
    for (Vertex v = 1; v <= g_.order(); ++v)
      if (domain_[v] == 0) return 0;
    search(g_.order());
    return found_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<int>& solution() const noexcept { return solution_; }

 private:
  bool search(int remaining) {
    if (++nodes_ > budget_) throw ResourceError("solver node budget exhausted");
    if (remaining == 0) {
      if (found_++ == 0) {
        solution_.assign(g_.order(), 0);
        for (Vertex v = 1; v <= g_.order(); ++v) solution_[v - 1] = chosen_[v] - g_.first(v);  // chosen_ holds id + 1
      }
      return !count_all_;
    }
    Vertex pick = 0;
    for (Vertex v = 1; v <= g_.order(); ++v)
      if (chosen_[v] == 0 && (pick == 0 || domain_[v] < domain_[pick])) pick = v;
    for (int x = g_.first(pick); x < g_.last(pick); ++x) {
      if (blocked_[x] != 0) continue;
      chosen_[pick] = x + 1;  // stored +1 so that 0 means "uncolored"
      bool wiped = false;
      for (int y : g_.conflicts(x)) {
        Vertex w = g_.owner(y);
        if (chosen_[w] != 0) continue;
        if (blocked_[y]++ == 0 && --domain_[w] == 0) wiped = true;
      }
      bool done = !wiped && search(remaining - 1);
      for (int y : g_.conflicts(x)) {
        Vertex w = g_.owner(y);
        if (chosen_[w] != 0) continue;
        if (--blocked_[y] == 0) ++domain_[w];
      }
      chosen_[pick] = 0;
      if (done) return true;
    }
    return false;
  }

  const ColorGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t found_ = 0;
  bool count_all_ = false;
  std::vector<int> blocked_;
  std::vector<int> domain_;
  std::vector<int> chosen_;  // flat color id + 1, 0 = uncolored
  std::vector<int> solution_;
};

}  // namespace detail

/// Exact (L,H)-colorability. Deterministic: MRV with ties to the lowest vertex, colors in index order.
inline SolveResult solve(const Cover& c, const SolveOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (!opts.trusted) {
    auto report = validate(c);
    if (!report.ok()) throw std::invalid_argument("solve: invalid cover: " + describe(report.violations.front()));
  }
  detail::ColorGraph g(c);
  detail::TransversalSearch search(g, opts.node_budget);
  SolveResult result;
  if (search.run(false) > 0) {
    result.status = SolveStatus::Colorable;
    result.coloring = Transversal{search.solution()};
    if (!check_transversal(c, *result.coloring)) throw InvariantError("solver produced a dependent transversal");
  }
  result.nodes_explored = search.nodes();
  result.time = std::chrono::steady_clock::now() - start;
  return result;
}

inline bool is_colorable(const Cover& c, const SolveOptions& opts = {}) { return solve(c, opts).colorable(); }

/// Number of (L,H)-colorings.
inline std::uint64_t count_colorings(const Cover& c, const SolveOptions& opts = {}) {
  if (!opts.trusted && !validate(c).ok()) throw std::invalid_argument("count_colorings: invalid cover");
  detail::ColorGraph g(c);
  detail::TransversalSearch search(g, opts.node_budget);
  return search.run(true);
}

/// Colors vertices in `order`, each with its lowest-index color not adjacent to an
/// already chosen one. Returns nullopt when some vertex has no such color.
inline std::optional<Transversal> greedy_color(const Cover& c, const std::vector<Vertex>& order) {
  std::vector<bool> seen(c.order() + 1, false);
  if (static_cast<int>(order.size()) != c.order()) throw std::invalid_argument("greedy_color: order must list every vertex once");
  for (Vertex v : order) {
    if (!c.base().contains(v) || seen[v]) throw std::invalid_argument("greedy_color: order must be a permutation");
    seen[v] = true;
  }
  detail::ColorGraph g(c);
  std::vector<bool> blocked(g.colors(), false);
  Transversal t{std::vector<int>(c.order(), 0)};
  for (Vertex v : order) {
    int pick = -1;
    for (int x = g.first(v); x < g.last(v) && pick < 0; ++x)
      if (!blocked[x]) pick = x;
    if (pick < 0) return std::nullopt;
    t.choice[v - 1] = pick - g.first(v) + 1;
    for (int y : g.conflicts(pick)) blocked[y] = true;
  }
  return t;
}

}  // namespace dpcolor
