#include <gtest/gtest.h>

#include "dpcolor/characterization.hpp"
#include "dpcolor/chromatic.hpp"
#include "dpcolor/solver.hpp"

using namespace dpcolor;

namespace {

Multigraph bowtie() {
  Multigraph g(5);
  for (auto [u, v] : {std::pair{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}) g.set_multiplicity(u, v, 1);
  return g;
}

Multigraph k4_minus_edge() {
  auto g = complete_graph(4);
  g.set_multiplicity(1, 2, 0);
  return g;
}

Multigraph disjoint(const Multigraph& a, const Multigraph& b) {
  Multigraph g(a.order() + b.order());
  for (const auto& e : a.edges()) g.set_multiplicity(e.u, e.v, e.multiplicity);
  for (const auto& e : b.edges()) g.set_multiplicity(e.u + a.order(), e.v + a.order(), e.multiplicity);
  return g;
}

void expect_sound_witness(const Multigraph& g, const DegreeColorabilityVerdict& v) {
  ASSERT_FALSE(v.colorable);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->base(), g);
  EXPECT_TRUE(validate(*v.witness).ok());
  EXPECT_TRUE(is_degree_cover(*v.witness));
  EXPECT_FALSE(solve(*v.witness).colorable());
}

}  // namespace

TEST(Decide, SquaredSixCycle) {
  auto g = cycle_graph(6, 2);
  auto v = decide_degree_colorable(g);
  expect_sound_witness(g, v);
  EXPECT_EQ(*v.witness, build_bad_cycle(6, 2));
  ASSERT_EQ(v.reasons.size(), 1u);
  EXPECT_EQ(v.reasons[0].shape, (BlockClass{BlockKind::CyclePower, 6, 2}));
}

TEST(Decide, CycleLabelledOutOfOrder) {
  Multigraph g(5);
  for (auto [u, v] : {std::pair{1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}}) g.set_multiplicity(u, v, 1);
  expect_sound_witness(g, decide_degree_colorable(g));
  g = Multigraph(4);
  for (auto [u, v] : {std::pair{1, 2}, {1, 3}, {2, 4}, {3, 4}}) g.set_multiplicity(u, v, 2);
  expect_sound_witness(g, decide_degree_colorable(g));
}

TEST(Decide, Bowtie) {
  auto v = decide_degree_colorable(bowtie());
  expect_sound_witness(bowtie(), v);
  EXPECT_EQ(*v.witness, glue(build_bad_complete(3, 1), 3, build_bad_complete(3, 1), 1));
  EXPECT_EQ(v.witness->list_size(3), 4);
}

TEST(Decide, KFourMinusEdge) {
  auto v = decide_degree_colorable(k4_minus_edge());
  EXPECT_TRUE(v.colorable);
  EXPECT_FALSE(v.witness);
  EXPECT_EQ(v.reasons.at(0).shape.kind, BlockKind::Other);
  EXPECT_TRUE(degree_colorable_oracle(k4_minus_edge()).degree_colorable);
}

TEST(Decide, TreesAreNotDegreeColorable) {
  for (int n = 2; n <= 6; ++n) expect_sound_witness(path_graph(n), decide_degree_colorable(path_graph(n)));
  Multigraph star(5);
  for (Vertex v = 2; v <= 5; ++v) star.set_multiplicity(1, v, 1);
  expect_sound_witness(star, decide_degree_colorable(star));
}

TEST(Decide, PowerGrids) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k) {
      auto g = complete_graph(n, k);
      auto v = decide_degree_colorable(g);
      ASSERT_FALSE(v.colorable);
      EXPECT_EQ(*v.witness, build_bad_complete(n, k));
    }
  for (int n = 4; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k) {
      auto g = cycle_graph(n, k);
      auto v = decide_degree_colorable(g);
      ASSERT_FALSE(v.colorable);
      EXPECT_EQ(*v.witness, build_bad_cycle(n, k));
    }
}

TEST(Decide, MixedBlockTree) {
  // K_4^1 - C_5^1 at vertex 4, a double edge hanging off 6, a triangle of double edges at 8.
  Multigraph g(11);
  for (Vertex u = 1; u <= 4; ++u)
    for (Vertex v = u + 1; v <= 4; ++v) g.set_multiplicity(u, v, 1);
  for (auto [u, v] : {std::pair{4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}}) g.set_multiplicity(u, v, 1);
  g.set_multiplicity(6, 9, 2);
  for (auto [u, v] : {std::pair{8, 10}, {10, 11}, {11, 8}}) g.set_multiplicity(u, v, 2);
  auto v = decide_degree_colorable(g);
  expect_sound_witness(g, v);
  EXPECT_EQ(v.reasons.size(), 4u);
}

TEST(Decide, OneBadBlockIsEnough) {
  auto g = bowtie();
  g.add_edges(4, 5);
  auto v = decide_degree_colorable(g);
  EXPECT_TRUE(v.colorable);
  EXPECT_TRUE(degree_colorable_oracle(g).degree_colorable);
}

TEST(Decide, Errors) {
  EXPECT_THROW(decide_degree_colorable(Multigraph(0)), std::invalid_argument);
  EXPECT_THROW(decide_degree_colorable(Multigraph(2)), std::invalid_argument);
  auto v = decide_degree_colorable(Multigraph(1));
  EXPECT_FALSE(v.colorable);
  EXPECT_EQ(v.witness->list_size(1), 0);
}

TEST(DecideAny, CycleAndPath) {
  auto g = disjoint(cycle_graph(4), path_graph(3));
  auto parts = decide_degree_colorable_any(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].vertices, (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_FALSE(parts[0].verdict.colorable);
  EXPECT_EQ(parts[1].vertices, (std::vector<Vertex>{5, 6, 7}));
  EXPECT_FALSE(parts[1].verdict.colorable);
}

TEST(DecideAny, SingleVertexAndTwoColorableParts) {
  auto one = decide_degree_colorable_any(Multigraph(1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_FALSE(one[0].verdict.colorable);
  auto two = decide_degree_colorable_any(disjoint(k4_minus_edge(), k4_minus_edge()));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE(two[0].verdict.colorable);
  EXPECT_TRUE(two[1].verdict.colorable);
}
