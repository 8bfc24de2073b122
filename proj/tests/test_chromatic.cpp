#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dpcolor/bad_cover_search.hpp"
#include "dpcolor/census.hpp"
#include "dpcolor/chromatic.hpp"
#include "oracles.hpp"

using namespace dpcolor;

namespace {

std::vector<int> degrees(const Multigraph& g) {
  std::vector<int> d;
  for (Vertex v = 1; v <= g.order(); ++v) d.push_back(g.degree(v));
  return d;
}

// Whether some per-vertex relabelling maps a onto b (exhaustive over permutations).
bool gauge_equivalent(const Cover& a, const Cover& b) {
  if (!(a.base() == b.base()) || a.list_sizes() != b.list_sizes()) return false;
  const int n = a.order();
  std::vector<std::vector<int>> perms(n);
  for (Vertex v = 1; v <= n; ++v) {
    perms[v - 1].resize(a.list_size(v));
    std::iota(perms[v - 1].begin(), perms[v - 1].end(), 1);
  }
  while (true) {
    if (relabel_colors(a, perms) == b) return true;
    int i = n - 1;
    while (i >= 0 && !std::next_permutation(perms[i].begin(), perms[i].end())) --i;
    if (i < 0) return false;
  }
}

Multigraph k4_minus_edge() {
  auto g = complete_graph(4);
  g.set_multiplicity(1, 2, 0);
  return g;
}

ChromaticOptions route(CoverStrategy s) {
  ChromaticOptions o;
  o.strategy = s;
  return o;
}

ChromaticOptions enumerate_route() { return route(CoverStrategy::Enumerate); }

}  // namespace

TEST(ChiDp, Cycles) {
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(chi_dp(cycle_graph(n)), 3) << "C_" << n;
}

TEST(ChiDp, FatEdges) {
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(chi_dp(complete_graph(2, k)), k + 1);
}

TEST(ChiDp, SmallCases) {
  EXPECT_EQ(chi_dp(Multigraph(1)), 1);
  EXPECT_EQ(chi_dp(Multigraph(3)), 1);
  EXPECT_EQ(chi_dp(path_graph(4)), 2);
  EXPECT_EQ(chi_dp(complete_graph(4)), 4);
  EXPECT_EQ(chi_dp(Multigraph(0)), 0);
}

TEST(ChiDp, MatchesRawCoverOracleOnTinyGraphs) {
  const std::vector<Multigraph> graphs{complete_graph(2), path_graph(3), complete_graph(3), cycle_graph(4), complete_graph(2, 2),
                                       [] {
                                         Multigraph g(3);
                                         g.set_multiplicity(1, 2, 2);
                                         g.set_multiplicity(2, 3, 1);
                                         return g;
                                       }()};
  for (const auto& g : graphs) EXPECT_EQ(chi_dp(g), oracle::chi_dp(g)) << to_text(g);
}

TEST(ChiDp, BetweenChromaticNumberAndDegeneracyBound) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : connected_simple_graphs(n)) {
      const int chi = chi_dp(g);
      EXPECT_GE(chi, oracle::chromatic_number(g)) << to_text(g);
      EXPECT_LE(chi, degeneracy(g) + 1) << to_text(g);
    }
}

TEST(ChiDp, SearchAndEnumerationAgree) {
  std::vector<Multigraph> graphs;
  for (int n = 2; n <= 3; ++n)
    for (const auto& g : connected_multigraphs(n, 2)) graphs.push_back(g);
  for (const auto& g : connected_simple_graphs(4)) graphs.push_back(g);
  for (const auto& g : graphs) EXPECT_EQ(chi_dp(g, route(CoverStrategy::Search)), chi_dp(g, enumerate_route())) << to_text(g);
}

TEST(ChiDp, AutoMatchesSearchOnFiveVertices) {
  for (const auto& g : connected_simple_graphs(5)) EXPECT_EQ(chi_dp(g), chi_dp(g, route(CoverStrategy::Search))) << to_text(g);
}

TEST(KCore, PeelsLowDegreeVertices) {
  // K4 with a pendant path 4-5-6.
  auto g = Multigraph(6);
  for (auto [u, v] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}}) g.set_multiplicity(u, v, 1);
  EXPECT_EQ(k_core(g, 3), complete_graph(4));
  EXPECT_EQ(k_core(g, 4).order(), 0);
  EXPECT_EQ(k_core(cycle_graph(5, 2), 4), cycle_graph(5, 2));
  EXPECT_EQ(k_core(g, 0), g);
}

TEST(CountCovers, MatchesVisitsAndSaturates) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    Multigraph g(n);
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) g.set_multiplicity(u, v, static_cast<int>(rng() % 3));
    std::vector<int> sizes;
    for (int v = 0; v < n; ++v) sizes.push_back(1 + static_cast<int>(rng() % 3));
    const auto visited = for_each_cover(g, sizes, {}, [](const Cover&) { return true; });
    EXPECT_EQ(count_covers(g, sizes, {}, 1'000'000), visited) << to_text(g);
    EXPECT_LE(count_covers(g, sizes, {}, 3), 3u);
  }
}

TEST(DpColorableWith, Basics) {
  EXPECT_FALSE(dp_colorable_with(cycle_graph(4), 2));
  EXPECT_TRUE(dp_colorable_with(cycle_graph(4), 3));
  EXPECT_TRUE(dp_colorable_with(Multigraph(0), 0));
  EXPECT_FALSE(dp_colorable_with(Multigraph(1), 0));
  EXPECT_THROW(dp_colorable_with(cycle_graph(4), -1), std::invalid_argument);
}

TEST(Oracle, FourCycle) {
  auto r = degree_colorable_oracle(cycle_graph(4));
  EXPECT_FALSE(r.degree_colorable);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(gauge_equivalent(*r.witness, build_bad_cycle(4, 1)));
  EXPECT_TRUE(gauge_equivalent(build_bad_cycle(4, 1), *r.witness));
}

TEST(Oracle, FourCycleEnumerationWitness) {
  auto r = degree_colorable_oracle(cycle_graph(4), enumerate_route());
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(gauge_equivalent(*r.witness, build_bad_cycle(4, 1)));
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(degree_colorable_oracle(k4_minus_edge()).degree_colorable);
  EXPECT_TRUE(degree_colorable_oracle(k4_minus_edge(), enumerate_route()).degree_colorable);
  auto single = degree_colorable_oracle(Multigraph(1));
  EXPECT_FALSE(single.degree_colorable);
  ASSERT_TRUE(single.witness);
  EXPECT_EQ(single.witness->list_size(1), 0);
  EXPECT_THROW(degree_colorable_oracle(Multigraph(2)), std::invalid_argument);
}

TEST(Oracle, EnumerationCapRaises) {
  auto o = enumerate_route();
  o.enumeration.caps.max_degree_sum = 6;
  EXPECT_THROW(degree_colorable_oracle(cycle_graph(4), o), ResourceError);
}

TEST(Oracle, WitnessesAreUncolorableDegreeCovers) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : connected_multigraphs(n, 2)) {
      auto r = degree_colorable_oracle(g);
      if (r.degree_colorable) continue;
      ASSERT_TRUE(r.witness);
      EXPECT_TRUE(validate(*r.witness).ok());
      EXPECT_TRUE(is_degree_cover(*r.witness));
      EXPECT_FALSE(solve(*r.witness).colorable());
    }
}

TEST(BadCoverSearch, AgreesWithRawEnumeration) {
  // Tiny instances with mixed list sizes, checked against every raw cover.
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Multigraph g(3);
    g.set_multiplicity(1, 2, 1 + static_cast<int>(rng() % 2));
    g.set_multiplicity(2, 3, 1);
    if (rng() % 2) g.set_multiplicity(1, 3, 1);
    std::vector<int> sizes;
    for (int v = 0; v < 3; ++v) sizes.push_back(1 + static_cast<int>(rng() % 3));
    auto found = find_uncolorable_cover(g, sizes);
    EXPECT_EQ(found.has_value(), oracle::has_uncolorable_cover(g, sizes)) << to_text(g);
    if (found) {
      EXPECT_TRUE(validate(*found).ok());
      EXPECT_FALSE(oracle::colorable(*found));
    }
  }
}

TEST(BadCoverSearch, BudgetAndSizeLimits) {
  BadCoverSearchOptions o;
  o.node_budget = 2;
  EXPECT_THROW(find_uncolorable_cover(k4_minus_edge(), degrees(k4_minus_edge()), o), ResourceError);
  EXPECT_THROW(find_uncolorable_cover(complete_graph(2), std::vector<int>{33, 1}), ResourceError);
  BadCoverSearchStats stats;
  find_uncolorable_cover(cycle_graph(4), degrees(cycle_graph(4)), {}, &stats);
  EXPECT_GT(stats.nodes, 0u);
}

TEST(Saturate, KeepsValidityAndAddsOnlyEdges) {
  std::mt19937 rng(2);
  auto g = complete_graph(4);
  g.set_multiplicity(1, 2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    Cover c(g, degrees(g));
    for (const auto& e : g.edges())
      for (int i = 1; i <= c.list_size(e.u); ++i)
        if (rng() % 4 == 0) {
          const int j = 1 + static_cast<int>(rng() % c.list_size(e.v));
          Cover t = c;
          t.add_cross_edge(e.u, i, e.v, j);
          if (validate(t).ok()) c = t;
        }
    auto s = saturate(c);
    EXPECT_TRUE(validate(s).ok());
    for (const auto& [pair, edges] : c.cross_map())
      for (auto [i, j] : edges) EXPECT_TRUE(s.has_cross_edge({pair.first, i}, {pair.second, j}));
    EXPECT_EQ(saturate(s), s);
    if (solve(s).colorable()) EXPECT_TRUE(solve(c).colorable());
  }
}

TEST(LargerLists, RestrictionArgument) {
  // Lists larger than the degree only help: the cover restricted to the first
  // deg(v) colors is a degree cover, and any coloring of it colors the original.
  auto g = cycle_graph(5);
  std::mt19937 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> sizes{2, 3, 2, 4, 2};
    auto c = random_cover(g, sizes, rng);
    auto r = solve(c);
    Cover sub(g, degrees(g));
    for (const auto& [pair, edges] : c.cross_map())
      for (auto [i, j] : edges)
        if (i <= 2 && j <= 2) sub.add_cross_edge(pair.first, i, pair.second, j);
    if (solve(sub).colorable()) EXPECT_TRUE(r.colorable());
  }
}
