#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cospec/constructions.hpp"
#include "cospec/errors.hpp"
#include "cospec/spectra.hpp"
#include "support/oracles.hpp"

using namespace cospec;

namespace {

CharPoly x_pow(int n) { return CharPoly::monomial(Rational(1), static_cast<std::size_t>(n)); }

}  // namespace

TEST(Blowup, CountsAndNames) {
  const auto g = blowup(cycle(6), {{"b", 3}, {"d", 3}, {"f", 3}});
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(edge_count(g), 18u);
  EXPECT_TRUE(g.contains("a"));
  EXPECT_TRUE(g.contains("b#3"));
  EXPECT_TRUE(is_simple(g));
  EXPECT_EQ(blowup(cycle(6), {}), cycle(6));
}

TEST(Blowup, RejectsNonSimpleInput) {
  const auto weighted = WeightedGraph::build({{"a"}, {"b"}}, {{"a", "b", Rational(2)}});
  EXPECT_THROW(blowup(weighted, {}), DomainError);
  const auto looped = WeightedGraph::build({{"a"}}, {{"a", "a"}});
  EXPECT_THROW(blowup(looped, {}), DomainError);
  EXPECT_THROW(blowup(cycle(4), {{"a", 0}}), DomainError);
  EXPECT_THROW(blowup(cycle(4), {{"zz", 2}}), GraphError);
}

TEST(Blowup, CoalescingRecoversProductWeights) {
  const Multiplicity m{{"a", 2}, {"b", 5}, {"c", 1}, {"d", 3}, {"e", 4}, {"f", 1}};
  const auto merged = coalesce_all(blowup(cycle(6), m)).graph;
  ASSERT_EQ(merged.order(), 6u);
  const int mult[] = {2, 5, 1, 3, 4, 1};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(merged.edge_weight(i, (i + 1) % 6), Rational(mult[i] * mult[(i + 1) % 6]));
  }
}

TEST(Blowup, PairValidity) {
  EXPECT_TRUE(blowup_pair_valid(3, 3, 1, 3, 2, 2));
  EXPECT_FALSE(blowup_pair_valid(3, 3, 1, 3, 3, 3));
  EXPECT_FALSE(blowup_pair_valid(3, 3, 0, 3, 2, 1));
}

TEST(ScaledIsomorphism, UniformCycles) {
  const auto found = scaled_isomorphism(scale(cycle(6), Rational(3)), scale(cycle(6), Rational(4)));
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->alpha, Rational(4, 3));
}

TEST(ScaledIsomorphism, Fig3CoalescedPair) {
  const auto found =
      scaled_isomorphism(coalesce_all(fixture("fig3_left")).graph, coalesce_all(fixture("fig3_right")).graph);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->alpha, Rational(8, 9));
}

TEST(ScaledIsomorphism, NegativeCases) {
  const auto k2 = WeightedGraph::build({{"a"}, {"b"}}, {{"a", "b"}});
  const auto p3 = WeightedGraph::build({{"a"}, {"b"}, {"c"}}, {{"a", "b"}, {"b", "c"}});
  EXPECT_FALSE(scaled_isomorphism(k2, p3).has_value());
  EXPECT_FALSE(scaled_isomorphism(cycle(6), disjoint_union(cycle(3), cycle(3))).has_value());
}

TEST(ScaledIsomorphism, RandomScaledCopies) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = oracle::random_weighted_graph(rng, 2 + trial % 8);
    const Rational alpha = oracle::random_positive(rng, 9, 5);
    const auto found = scaled_isomorphism(g, scale(g, alpha));
    ASSERT_TRUE(found.has_value()) << trial;
    EXPECT_EQ(found->alpha, alpha);
    for (const auto& [from, to] : found->map) {
      EXPECT_EQ(scale(g, alpha).vertex_weight(to), alpha * g.vertex_weight(from));
    }
  }
}

TEST(Theorem3, FigurePairs) {
  const auto fig2 = theorem3_report(fixture("fig2_left"), fixture("fig2_right"));
  EXPECT_TRUE(fig2.holds);
  ASSERT_TRUE(fig2.iso.has_value());
  EXPECT_EQ(fig2.iso->alpha, Rational(4, 3));
  EXPECT_TRUE(theorem3_check(fixture("fig3_left"), fixture("fig3_right")));
  EXPECT_FALSE(theorem3_check(fixture("fig2_left"), cycle(6)));
}

TEST(Families, SizesAndEdgeCounts) {
  for (int k = 1; k <= 5; ++k) {
    const auto f1 = family_subgraph1(k, FamilyVariant::full);
    const auto s1 = family_subgraph1(k, FamilyVariant::sub);
    EXPECT_EQ(f1.order(), static_cast<std::size_t>(3 * k + 3));
    EXPECT_EQ(edge_count(f1), static_cast<std::size_t>(k * k + 4 * k + 3));
    EXPECT_EQ(edge_count(f1) - edge_count(s1), static_cast<std::size_t>(k * k));
    const auto f2 = family_subgraph2(k, FamilyVariant::full);
    const auto s2 = family_subgraph2(k, FamilyVariant::sub);
    EXPECT_EQ(f2.order(), static_cast<std::size_t>(4 * k + 4));
    EXPECT_EQ(edge_count(f2) - edge_count(s2), static_cast<std::size_t>(k * k));
  }
  EXPECT_THROW(family_subgraph1(0, FamilyVariant::full), DomainError);
  EXPECT_THROW(family_charpoly_closed(3, 1), DomainError);
  EXPECT_THROW(parse_family_variant("half"), ParseError);
}

TEST(Families, ClosedFormsAtSampleK) {
  EXPECT_EQ(family_charpoly_closed(1, 2),
            CharPoly({Rational(0), Rational(5, 18), Rational(-1, 12), Rational(-43, 36), Rational(0), Rational(1)}));
  EXPECT_EQ(family_charpoly_closed(2, 1), CharPoly({Rational(-1, 64), Rational(0), Rational(21, 64), Rational(0),
                                                    Rational(-21, 16), Rational(0), Rational(1)}));
}

TEST(Families, CoalescedLabelsOfSecondFamily) {
  const int k = 3;
  const auto full = family_coalesced(2, k, FamilyVariant::full);
  ASSERT_EQ(full.graph.order(), 6u);
  const auto& g = full.graph;
  EXPECT_EQ(g.edge_weight(0, 1), Rational(k + 1));
  EXPECT_EQ(g.edge_weight(0, 2), Rational(k + 1));
  EXPECT_EQ(g.edge_weight(2, 3), Rational(1));
  EXPECT_EQ(g.edge_weight(2, 4), Rational(k));
  EXPECT_EQ(g.edge_weight(4, 5), Rational(k * k));
  EXPECT_EQ(full.removed, static_cast<std::size_t>(4 * k - 2));
}

TEST(Families, FirstFamilyFullGraphFactorization) {
  for (int k = 1; k <= 5; ++k) {
    for (auto v : {FamilyVariant::full, FamilyVariant::sub}) {
      EXPECT_EQ(char_poly(family_subgraph1(k, v), MatrixKind::transition),
                family_charpoly_closed(1, k) * x_pow(3 * k - 2))
          << k;
    }
  }
}

// Each folded gadget contributes an edge with unit vertex weights, whose
// transition eigenvalues are +1/2 and -1/2.
TEST(Families, SecondFamilyFullGraphFactorization) {
  const CharPoly gadget({Rational(-1, 4), Rational(0), Rational(1)});
  for (int k = 1; k <= 5; ++k) {
    for (auto v : {FamilyVariant::full, FamilyVariant::sub}) {
      EXPECT_EQ(char_poly(family_subgraph2(k, v), MatrixKind::transition),
                family_charpoly_closed(2, k) * x_pow(2 * k - 2) * pow(gadget, k))
          << k;
    }
  }
}

TEST(Fixtures, CatalogIsComplete) {
  const auto names = fixture_names();
  for (const auto& name : names) EXPECT_NO_THROW(fixture(name)) << name;
  EXPECT_EQ(names.size(), 15u);
  EXPECT_THROW(fixture("fig99"), DomainError);
}

TEST(Fixtures, Fig6Spiders) {
  const auto left = fixture("fig6_left");
  const auto right = fixture("fig6_right");
  EXPECT_EQ(left.order(), 26u);
  EXPECT_EQ(right.order(), 26u);
  EXPECT_EQ(coalesce_all(left).removed, 16u);
  EXPECT_EQ(coalesce_all(right).removed, 16u);
  EXPECT_TRUE(cospectral(left, right, MatrixKind::normalized));
}

TEST(Fixtures, Fig10Pair) {
  EXPECT_EQ(edge_count(fixture("fig10_left")), 16u);
  const auto right = eigenvalues_numeric(fixture("fig10_right"), MatrixKind::adjacency);
  std::vector<double> expected{-1, -1, -1, -1, 1, 1, 1, 1};
  for (double s : {-1.0, 1.0}) {
    for (double t : {-1.0, 1.0}) expected.push_back(s * std::sqrt(2.0 + t * std::sqrt(3.0)));
  }
  std::sort(expected.begin(), expected.end());
  ASSERT_EQ(right.size(), expected.size());
  for (std::size_t i = 0; i < right.size(); ++i) EXPECT_NEAR(right[i], expected[i], 1e-9);
}

TEST(Fixtures, CombAndCycle) {
  EXPECT_EQ(comb(3).order(), 6u);
  EXPECT_EQ(edge_count(comb(3)), 5u);
  EXPECT_THROW(cycle(2), DomainError);
}
