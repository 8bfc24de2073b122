#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dpcolor/blocks.hpp"
#include "dpcolor/chromatic.hpp"
#include "dpcolor/multigraph.hpp"

namespace dpcolor {

/// Exact rational with arbitrary-precision numerator and denominator (always reduced, denominator > 0).
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

// ---------------------------------------------------------------------------
// Criticality

enum class DeletionKind { Edge, Vertex };

/// A deletion that does not bring the DP-chromatic number below k.
struct FailingDeletion {
  DeletionKind kind;
  Vertex u;
  Vertex v;  // 0 for vertex deletions
};

struct CriticalityReport {
  bool is_critical = false;
  /// chi_DP(G). Absent when an early failing edge deletion settled the answer
  /// before chi was needed (unless CriticalityOptions::always_compute_chi).
  std::optional<int> chi;
  std::optional<FailingDeletion> failing;
};

struct CriticalityOptions {
  ChromaticOptions chromatic;
  /// Also delete single vertices when n <= this. Edge deletions already suffice:
  /// any proper sub-multigraph sits inside G minus one edge (or is G minus an
  /// isolated vertex), and chi_DP is monotone under taking sub-multigraphs.
  int vertex_check_max_order = 5;
  bool always_compute_chi = false;
};

inline Multigraph delete_one_edge(const Multigraph& g, Vertex u, Vertex v) {
  Multigraph h = g;
  h.set_multiplicity(u, v, g.multiplicity(u, v) - 1);
  return h;
}

inline Multigraph delete_vertex(const Multigraph& g, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex u = 1; u <= g.order(); ++u)
    if (u != v) keep.push_back(u);
  return g.induced(keep);
}

/// DP-k-criticality: chi_DP(G) = k and every proper sub-multigraph has smaller chi_DP.
///
/// Order of work: uncolorable (k-1)-covers are usually found fast while proofs of
/// colorability are exhaustive, so the deletions are screened first.
inline CriticalityReport check_critical(const Multigraph& g, int k, const CriticalityOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("check_critical: k must be positive");
  CriticalityReport report;
  if (opts.always_compute_chi) {
    report.chi = chi_dp(g, opts.chromatic);
    if (*report.chi != k) return report;
  }
  for (const auto& e : g.edges())
    if (!dp_colorable_with(delete_one_edge(g, e.u, e.v), k - 1, opts.chromatic)) {
      report.failing = FailingDeletion{DeletionKind::Edge, e.u, e.v};
      return report;
    }
  for (Vertex v = 1; v <= g.order(); ++v) {
    // An isolated vertex is the only deletion not covered by some edge deletion.
    if (!g.incident(v).empty() && g.order() > opts.vertex_check_max_order) continue;
    if (!dp_colorable_with(delete_vertex(g, v), k - 1, opts.chromatic)) {
      report.failing = FailingDeletion{DeletionKind::Vertex, v, 0};
      return report;
    }
  }
  if (!report.chi) {
    if (dp_colorable_with(g, k - 1, opts.chromatic))
      report.chi = chi_dp(g, opts.chromatic);
    else if (dp_colorable_with(g, k, opts.chromatic))
      report.chi = k;
    else
      report.chi = chi_dp(g, opts.chromatic);
  }
  report.is_critical = *report.chi == k;
  return report;
}

// ---------------------------------------------------------------------------
// Edge bounds

struct BoundCheck {
  bool holds = false;
  Rational slack;  // >= 0 iff the inequality holds; 0 means equality
};

/// 2|E| >= (k-1)n for DP-k-critical multigraphs; slack = 2|E| - (k-1)n.
inline BoundCheck check_bound_multigraph(const Multigraph& g, int k) {
  Rational slack = Rational(2 * g.edge_count()) - Rational(k - 1) * g.order();
  return {slack >= 0, slack};
}

/// k - 1 + (k-3)/(k^2-3).
inline Rational simple_critical_coefficient(int k) {
  const long long kk = k;
  return Rational(kk - 1) + Rational(kk - 3) / Rational(kk * kk - 3);
}

/// 2|E| >= (k-1+(k-3)/(k^2-3))n for DP-k-critical simple graphs other than K_k, k >= 4.
inline BoundCheck check_bound_simple(const Multigraph& g, int k) {
  if (k < 4) throw std::invalid_argument("check_bound_simple: requires k >= 4");
  if (!g.is_simple()) throw std::invalid_argument("check_bound_simple: graph must be simple");
  if (g.order() == k && g.pair_count() == k * (k - 1) / 2) throw std::invalid_argument("check_bound_simple: K_k is excluded");
  Rational slack = Rational(2 * g.edge_count()) - simple_critical_coefficient(k) * g.order();
  return {slack >= 0, slack};
}

namespace detail {

inline bool blocks_match(const Multigraph& g, bool odd_cycles_only) {
  if (!g.is_simple()) throw std::invalid_argument("tree test: graph must be simple");
  if (!is_connected(g)) throw std::invalid_argument("tree test: graph must be connected");
  for (const auto& c : blocks(g).classification) {
    if (c.kind == BlockKind::Other) return false;
    if (c.kind == BlockKind::CyclePower && odd_cycles_only && c.n % 2 == 0) return false;
  }
  return true;
}

}  // namespace detail

/// Every block is a complete graph or a cycle.
inline bool is_gdp_tree(const Multigraph& g) { return detail::blocks_match(g, false); }

/// Every block is a complete graph or an odd cycle.
inline bool is_gallai_tree(const Multigraph& g) { return detail::blocks_match(g, true); }

enum class GdpBoundStatus { Ok, NotGdpTree, DegreeTooLarge, ContainsKk };

inline std::string to_string(GdpBoundStatus s) {
  switch (s) {
    case GdpBoundStatus::Ok: return "ok";
    case GdpBoundStatus::NotGdpTree: return "not-a-gdp-tree";
    case GdpBoundStatus::DegreeTooLarge: return "max-degree-above-k-1";
    case GdpBoundStatus::ContainsKk: return "contains-K_k";
  }
  return "?";
}

struct GdpBoundCheck {
  GdpBoundStatus status = GdpBoundStatus::Ok;
  bool holds = false;  // meaningful only when status == Ok
  Rational slack;      // (k-2+2/(k-1))n - 2|E|
};

/// 2|E(T)| <= (k-2+2/(k-1))n for GDP-trees T with max degree <= k-1 and no K_k.
inline GdpBoundCheck check_gdp_edge_bound(const Multigraph& t, int k) {
  if (k < 4) throw std::invalid_argument("check_gdp_edge_bound: requires k >= 4");
  GdpBoundCheck out;
  if (!t.is_simple() || !is_connected(t) || !is_gdp_tree(t)) {
    out.status = GdpBoundStatus::NotGdpTree;
    return out;
  }
  if (t.max_degree() > k - 1) {
    out.status = GdpBoundStatus::DegreeTooLarge;
    return out;
  }
  // In a GDP-tree a K_k can only live inside a complete block.
  for (const auto& c : blocks(t).classification)
    if (c.kind == BlockKind::CompletePower && c.n >= k) {
      out.status = GdpBoundStatus::ContainsKk;
      return out;
    }
  const long long kk = k;
  Rational coeff = Rational(kk - 2) + Rational(2) / Rational(kk - 1);
  out.slack = coeff * t.order() - Rational(2 * t.edge_count());
  out.holds = out.slack >= 0;
  return out;
}

}  // namespace dpcolor
