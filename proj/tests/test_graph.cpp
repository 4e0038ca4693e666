#include <gtest/gtest.h>

#include <vector>

#include "cospec/errors.hpp"
#include "cospec/graph.hpp"

using cospec::EdgeSpec;
using cospec::GraphError;
using cospec::Rational;
using cospec::VertexSpec;
using cospec::WeightedGraph;

namespace {

WeightedGraph triangle_with_tail() {
  return WeightedGraph::build({{"a"}, {"b", Rational(1, 2)}, {"c"}, {"d"}},
                              {{"a", "b", Rational(2)}, {"b", "c"}, {"a", "c"}, {"c", "d", Rational(3, 2)}});
}

}  // namespace

TEST(Graph, DegreesIncludeVertexWeights) {
  const auto g = triangle_with_tail();
  EXPECT_EQ(degree(g, "a"), Rational(3));
  EXPECT_EQ(degree(g, "b"), Rational(7, 2));
  EXPECT_EQ(degree(g, "c"), Rational(7, 2));
  EXPECT_EQ(edge_count(g), 4u);
  EXPECT_EQ(total_edge_weight(g), Rational(11, 2));
}

TEST(Graph, LoopCountsOnce) {
  const auto g = WeightedGraph::build({{"u"}, {"v"}}, {{"u", "u", Rational(2)}, {"u", "v"}});
  EXPECT_TRUE(g.has_loop(0));
  EXPECT_EQ(degree(g, "u"), Rational(3));
  EXPECT_FALSE(is_simple(g));
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(WeightedGraph::build({{"a"}, {"a"}}, {}), GraphError);
  EXPECT_THROW(WeightedGraph::build({{"a"}}, {{"a", "z"}}), GraphError);
  EXPECT_THROW(WeightedGraph::build({{"a"}, {"b"}}, {{"a", "b", Rational(-1)}}), GraphError);
  EXPECT_THROW(WeightedGraph::build({{"a", Rational(-1)}}, {}), GraphError);
  EXPECT_THROW(WeightedGraph::build({{"a"}, {"b"}}, {{"a", "b"}, {"b", "a"}}), GraphError);
  EXPECT_THROW(WeightedGraph::build({{"a b"}}, {}), GraphError);
  EXPECT_THROW(WeightedGraph::build({{"#x"}}, {}), GraphError);
  EXPECT_THROW(WeightedGraph::build({{""}}, {}), GraphError);
}

TEST(Graph, ZeroWeightEdgesAreDropped) {
  const auto g = WeightedGraph::build({{"a"}, {"b"}}, {{"a", "b", Rational(0)}});
  EXPECT_EQ(edge_count(g), 0u);
  EXPECT_EQ(g.edge_weight("a", "b"), Rational(0));
}

TEST(Graph, ScaleMultipliesEveryWeight) {
  const auto g = triangle_with_tail();
  const auto h = scale(g, Rational(3, 2));
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(degree(h, i), Rational(3, 2) * degree(g, i));
  EXPECT_THROW(scale(g, Rational(0)), cospec::DomainError);
}

TEST(Graph, RestrictKeepsOrderAndNests) {
  const auto g = triangle_with_tail();
  const std::vector<std::string> outer{"d", "b", "c"};
  const std::vector<std::string> inner{"c", "b"};
  const auto r = restrict(g, outer);
  EXPECT_EQ(std::vector<std::string>(r.vertices().begin(), r.vertices().end()),
            (std::vector<std::string>{"b", "c", "d"}));
  EXPECT_EQ(restrict(r, inner), restrict(g, inner));
  EXPECT_EQ(r.vertex_weight("b"), Rational(1, 2));
}

TEST(Graph, DisjointUnionRenamesClashes) {
  const auto g = WeightedGraph::build({{"x"}, {"y"}}, {{"x", "y"}});
  const auto u = disjoint_union(g, g);
  EXPECT_EQ(u.order(), 4u);
  EXPECT_EQ(edge_count(u), 2u);
  EXPECT_TRUE(u.contains("h.x"));
}

TEST(Graph, Reorder) {
  const auto g = triangle_with_tail();
  const std::vector<std::string> order{"d", "c", "b", "a"};
  const auto r = reorder(g, order);
  EXPECT_EQ(r.id(0), "d");
  EXPECT_EQ(r.edge_weight("a", "b"), Rational(2));
  EXPECT_FALSE(r == g);
  EXPECT_EQ(reorder(r, std::vector<std::string>{"a", "b", "c", "d"}), g);
}

TEST(Graph, EdgesListedOnceInIndexOrder) {
  const auto edges = triangle_with_tail().edges();
  ASSERT_EQ(edges.size(), 4u);
  EXPECT_EQ(edges[0], (EdgeSpec{"a", "b", Rational(2)}));
  EXPECT_EQ(edges[3], (EdgeSpec{"c", "d", Rational(3, 2)}));
}
