#include <gtest/gtest.h>

#include "dpcolor/critical.hpp"

using namespace dpcolor;

namespace {

Multigraph c4_with_pendant() {
  Multigraph g(5);
  for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}}) g.set_multiplicity(u, v, 1);
  return g;
}

Multigraph k4_with_pendant_triangle() {
  Multigraph g(6);
  for (Vertex u = 1; u <= 4; ++u)
    for (Vertex v = u + 1; v <= 4; ++v) g.set_multiplicity(u, v, 1);
  for (auto [u, v] : {std::pair{4, 5}, {5, 6}, {6, 4}}) g.set_multiplicity(u, v, 1);
  return g;
}

}  // namespace

TEST(Critical, CompleteGraphK4) {
  auto r = check_critical(complete_graph(4), 4);
  EXPECT_TRUE(r.is_critical);
  EXPECT_EQ(r.chi, 4);
  EXPECT_FALSE(r.failing);
}

TEST(Critical, CyclePowers) {
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k <= 2; ++k) EXPECT_TRUE(check_critical(cycle_graph(n, k), 2 * k + 1).is_critical) << n << "," << k;
}

TEST(Critical, CompletePowers) {
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(check_critical(complete_graph(2, k), k + 1).is_critical);
  EXPECT_TRUE(check_critical(complete_graph(3, 2), 5).is_critical);
  EXPECT_TRUE(check_critical(complete_graph(3, 3), 7).is_critical);
}

TEST(Critical, PendantEdgeIsDeletable) {
  auto r = check_critical(c4_with_pendant(), 3);
  EXPECT_FALSE(r.is_critical);
  ASSERT_TRUE(r.failing);
  EXPECT_EQ(r.failing->kind, DeletionKind::Edge);
}

TEST(Critical, WrongTarget) {
  auto r = check_critical(cycle_graph(5), 4);
  EXPECT_FALSE(r.is_critical);
  EXPECT_EQ(r.chi, 3);
  CriticalityOptions o;
  o.always_compute_chi = true;
  auto s = check_critical(c4_with_pendant(), 3, o);
  EXPECT_EQ(s.chi, 3);
  EXPECT_FALSE(s.is_critical);
  EXPECT_THROW(check_critical(cycle_graph(5), 0), std::invalid_argument);
}

TEST(Critical, IsolatedVertexBreaksCriticality) {
  Multigraph g(4);
  for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {3, 1}}) g.set_multiplicity(u, v, 1);
  CriticalityOptions o;
  o.vertex_check_max_order = 0;
  auto r = check_critical(g, 3, o);
  EXPECT_FALSE(r.is_critical);
  ASSERT_TRUE(r.failing);
  EXPECT_EQ(r.failing->kind, DeletionKind::Vertex);
  EXPECT_EQ(r.failing->u, 4);
}

TEST(Critical, SingleVertex) {
  EXPECT_TRUE(check_critical(Multigraph(1), 1).is_critical);
  EXPECT_FALSE(check_critical(Multigraph(2), 1).is_critical);
}

TEST(Deletion, Helpers) {
  auto g = complete_graph(3, 2);
  EXPECT_EQ(delete_one_edge(g, 1, 2).multiplicity(1, 2), 1);
  EXPECT_EQ(delete_vertex(g, 2), complete_graph(2, 2));
}

TEST(BoundMultigraph, Equality) {
  auto a = check_bound_multigraph(complete_graph(3, 2), 5);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.slack, 0);
  EXPECT_EQ(check_bound_multigraph(complete_graph(4), 4).slack, 0);
  EXPECT_EQ(check_bound_multigraph(cycle_graph(5), 3).slack, 0);
  auto b = check_bound_multigraph(path_graph(3), 3);
  EXPECT_FALSE(b.holds);
  EXPECT_EQ(b.slack, -2);
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(check_bound_multigraph(cycle_graph(n, k), 2 * k + 1).slack, 0);
}

TEST(BoundSimple, Coefficient) {
  EXPECT_EQ(simple_critical_coefficient(4), Rational(40, 13));
  EXPECT_EQ(to_string(simple_critical_coefficient(4)), "40/13");
  EXPECT_EQ(simple_critical_coefficient(5), Rational(4) + Rational(2, 22));
}

TEST(BoundSimple, SlackArithmetic) {
  // 4-regular graph on 11 vertices (circulant C_11(1,2)): 2|E| = 44 = (4 + 1/11)*11 - 1.
  Multigraph g(11);
  for (Vertex v = 1; v <= 11; ++v) {
    g.set_multiplicity(v, v % 11 + 1, 1);
    g.set_multiplicity(v, (v + 1) % 11 + 1, 1);
  }
  auto r = check_bound_simple(g, 5);
  EXPECT_EQ(r.slack, Rational(-1));
  EXPECT_FALSE(r.holds);
  auto ok = check_bound_simple(cycle_graph(6, 1), 4);
  EXPECT_EQ(ok.slack, Rational(12) - Rational(240, 13));
}

TEST(BoundSimple, Errors) {
  EXPECT_THROW(check_bound_simple(cycle_graph(5), 3), std::invalid_argument);
  EXPECT_THROW(check_bound_simple(cycle_graph(5, 2), 4), std::invalid_argument);
  EXPECT_THROW(check_bound_simple(complete_graph(4), 4), std::invalid_argument);
  EXPECT_NO_THROW(check_bound_simple(complete_graph(5), 4));
}

TEST(GdpTree, Recognition) {
  EXPECT_TRUE(is_gdp_tree(path_graph(5)));
  EXPECT_TRUE(is_gallai_tree(path_graph(5)));
  EXPECT_TRUE(is_gdp_tree(k4_with_pendant_triangle()));
  auto k4e = complete_graph(4);
  k4e.set_multiplicity(1, 2, 0);
  EXPECT_FALSE(is_gdp_tree(k4e));
  EXPECT_TRUE(is_gdp_tree(cycle_graph(4)));
  EXPECT_FALSE(is_gallai_tree(cycle_graph(4)));
  EXPECT_TRUE(is_gallai_tree(cycle_graph(5)));
  EXPECT_THROW(is_gdp_tree(Multigraph(2)), std::invalid_argument);
  EXPECT_THROW(is_gdp_tree(complete_graph(2, 2)), std::invalid_argument);
}

TEST(GdpBound, Examples) {
  auto t = check_gdp_edge_bound(complete_graph(3), 4);
  EXPECT_EQ(t.status, GdpBoundStatus::Ok);
  EXPECT_EQ(t.slack, 2);
  for (int n = 1; n <= 8; ++n) {
    auto p = check_gdp_edge_bound(path_graph(n), 4);
    EXPECT_EQ(p.slack, Rational(8 * n, 3) - 2 * (n - 1));
    EXPECT_TRUE(p.holds);
  }
}

TEST(GdpBound, PreconditionStatuses) {
  EXPECT_EQ(check_gdp_edge_bound(complete_graph(4), 4).status, GdpBoundStatus::ContainsKk);
  EXPECT_EQ(check_gdp_edge_bound(k4_with_pendant_triangle(), 5).status, GdpBoundStatus::DegreeTooLarge);
  auto k4e = complete_graph(4);
  k4e.set_multiplicity(1, 2, 0);
  EXPECT_EQ(check_gdp_edge_bound(k4e, 4).status, GdpBoundStatus::NotGdpTree);
  EXPECT_EQ(to_string(GdpBoundStatus::ContainsKk), "contains-K_k");
  EXPECT_THROW(check_gdp_edge_bound(path_graph(3), 3), std::invalid_argument);
}
