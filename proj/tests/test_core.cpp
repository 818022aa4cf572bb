#include <gtest/gtest.h>

#include "support.hpp"

using namespace mwidth;

TEST(Tree, SingleVertex) {
  const auto t = validate_tree(1, {});
  EXPECT_EQ(t.size(), 1);
  EXPECT_TRUE(t.edges().empty());
}

TEST(Tree, Path) { EXPECT_EQ(validate_tree(3, {{0, 1}, {1, 2}}).edges().size(), 2u); }

TEST(Tree, Rejects) {
  EXPECT_THROW(validate_tree(3, {{0, 1}, {1, 2}, {0, 2}}), NotATree);
  EXPECT_THROW(validate_tree(4, {{0, 1}, {1, 0}, {2, 3}}), NotATree);
  EXPECT_THROW(validate_tree(3, {{0, 0}, {1, 2}}), NotATree);
  EXPECT_THROW(validate_tree(4, {{0, 1}, {1, 2}}), NotATree);
  EXPECT_THROW(validate_tree(4, {{0, 1}, {0, 2}, {1, 2}}), NotATree);
  EXPECT_THROW(validate_tree(2, {{0, 5}}), NotATree);
  EXPECT_THROW(validate_tree(0, {}), NotATree);
}

TEST(Subtree, Membership) {
  const auto p = support::path(3);
  EXPECT_FALSE(is_subtree(p, std::vector<int>{0, 2}));
  EXPECT_TRUE(is_subtree(p, std::vector<int>{0, 1}));
  EXPECT_FALSE(is_subtree(p, std::vector<int>{}));
  EXPECT_THROW(is_subtree(p, std::vector<int>{3}), VertexOutOfRange);
  // leaves of a star only connect through the centre
  EXPECT_FALSE(is_subtree(support::star(3), std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(is_subtree(support::star(3), std::vector<int>{0, 1, 3}));
}

TEST(Subtree, MakeNormalises) {
  const auto s = Subtree::make(support::path(4), {2, 1, 2});
  EXPECT_EQ(s.vertices(), (std::vector<int>{1, 2}));
  EXPECT_THROW(Subtree::make(support::path(4), {0, 3}), NotASubtree);
}

TEST(IntersectionSystem, Intervals) {
  const auto sys = to_intersection_system(support::intervals({{0, 1}, {1, 2}}));
  EXPECT_TRUE(sys.meets(0, 1));
  const auto apart = to_intersection_system(support::intervals({{0, 1}, {2, 3}}));
  EXPECT_FALSE(apart.meets(0, 1));
}

TEST(IntersectionSystem, Subtrees) {
  const auto inst = support::subtrees(support::path(3), {{0, 1}, {2}});
  EXPECT_FALSE(to_intersection_system(inst).meets(0, 1));
  EXPECT_EQ(inst.system().label(0), "{0,1}");
}

TEST(IntersectionSystem, PointTreeSharedPoint) {
  const auto t = support::path(2);
  const auto h = PointTreeHypergraph::make(1, t, {{0, Subtree::make(t, {0})}, {0, Subtree::make(t, {1})}});
  EXPECT_TRUE(to_intersection_system(h).meets(0, 1));
}

TEST(IntersectionSystem, RejectsBadMatrix) {
  EXPECT_THROW(IntersectionSystem(2, {1, 1, 0, 1}), InvalidInstance);
  EXPECT_THROW(IntersectionSystem(2, {0, 0, 0, 1}), InvalidInstance);
  EXPECT_THROW(IntersectionSystem(2, {1, 0, 1}), InvalidInstance);
}

TEST(IntersectionSystem, SymmetricReflexiveOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto f = gen::random_intervals(seed, {8, 10, 4});
    const auto sys = to_intersection_system(f);
    const auto ref = brute::meets_of_intervals(support::to_brute(f));
    for (std::size_t i = 0; i < sys.size(); ++i)
      for (std::size_t j = 0; j < sys.size(); ++j) {
        EXPECT_EQ(sys.meets(i, j), sys.meets(j, i));
        EXPECT_EQ(sys.meets(i, j), ref[i][j] != 0);
      }
  }
}

TEST(Interval, RejectsReversed) { EXPECT_THROW(Interval::make(2, 1), InvalidInterval); }

TEST(Interval, RationalEndpoints) {
  IntervalFamily f;
  f.intervals = {Interval::make(Rational::parse("1/2"), Rational(1)), Interval::make(Rational::parse("2/2"), 3)};
  EXPECT_TRUE(to_intersection_system(f).meets(0, 1));
  EXPECT_EQ(f[1].lo, Rational(1));
}

TEST(Perturbation, TouchingPairKeepsMeeting) {
  const auto f = support::intervals({{0, 1}, {1, 2}});
  const auto g = make_endpoints_distinct(f);
  EXPECT_TRUE(endpoints_distinct(g));
  EXPECT_EQ(to_intersection_system(g), to_intersection_system(f));
  // ranks: lo0=1, lo1=2, hi0=3, hi1=4
  EXPECT_EQ(g[0].lo, Rational(1));
  EXPECT_EQ(g[0].hi, Rational(3));
  EXPECT_EQ(g[1].lo, Rational(2));
  EXPECT_EQ(g[1].hi, Rational(4));
}

TEST(Perturbation, DistinctInputIsOrderIsomorphic) {
  const auto g = make_endpoints_distinct(support::intervals({{0, 1}, {2, 3}}));
  EXPECT_EQ(g[0].hi, Rational(2));
  EXPECT_EQ(g[1].lo, Rational(3));
  EXPECT_FALSE(to_intersection_system(g).meets(0, 1));
}

TEST(Perturbation, PointIntervals) {
  const auto g = make_endpoints_distinct(support::intervals({{1, 1}, {1, 1}}));
  EXPECT_TRUE(endpoints_distinct(g));
  EXPECT_LT(g[0].lo, g[0].hi);
  EXPECT_LT(g[1].lo, g[1].hi);
  EXPECT_TRUE(to_intersection_system(g).meets(0, 1));
}

TEST(Perturbation, PatternPreservedOnTieHeavyFamilies) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto f = gen::random_intervals(seed, {static_cast<int>(seed % 12), 5, 3});
    const auto g = make_endpoints_distinct(f);
    ASSERT_TRUE(endpoints_distinct(g));
    EXPECT_EQ(brute::meets_of_intervals(support::to_brute(f)), brute::meets_of_intervals(support::to_brute(g)));
    EXPECT_EQ(make_endpoints_distinct(f).intervals.size(), g.size());
  }
}

TEST(Relation, Kinds) {
  const auto sys = to_intersection_system(support::intervals({{0, 1}, {1, 2}, {3, 4}}));
  const auto total = Relation::total();
  const auto dis = Relation::disjointness();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EXPECT_TRUE(total.related(sys, i, j));
      if (i != j) {
        EXPECT_EQ(dis.related(sys, i, j), !sys.meets(i, j));
      }
    }
  EXPECT_TRUE(dis.contains_disjointness(sys, all_indices(3)));
}

TEST(Relation, CustomMustContainDisjointness) {
  const auto t = support::path(3);
  const std::vector<VertexPair> only_one{{0, 1}};
  EXPECT_THROW(support::subtrees(t, {{0}, {1}, {2}}, {}, Relation::custom(only_one)), InvalidRelation);
  const std::vector<VertexPair> all_pairs{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_NO_THROW(support::subtrees(t, {{0}, {1}, {2}}, {}, Relation::custom(all_pairs)));
  const std::vector<VertexPair> reversed{{1, 0}, {2, 1}, {2, 0}};
  const auto inst = support::subtrees(t, {{0}, {1}, {2}}, {}, Relation::custom(reversed));
  EXPECT_TRUE(inst.relation.related(inst.system(), 0, 2));
}

TEST(SubtreeInstance, RejectsBadH1) {
  const auto t = support::path(3);
  EXPECT_THROW(support::subtrees(t, {{0}, {1}}, {0, 5}), InvalidInstance);
  EXPECT_THROW(support::subtrees(t, {{0}, {1}}, {1, 1}), InvalidInstance);
}

TEST(Poset, Validation) {
  EXPECT_THROW(Poset::make(2, std::vector<VertexPair>{{0, 0}}), NotAPartialOrder);
  EXPECT_THROW(Poset::make(3, std::vector<VertexPair>{{0, 1}, {1, 2}}), NotAPartialOrder);
  EXPECT_THROW(Poset::make(2, std::vector<VertexPair>{{0, 1}, {1, 0}}), NotAPartialOrder);
  const auto p = Poset::make(3, std::vector<VertexPair>{{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(p.greater(0, 2));
  EXPECT_FALSE(p.greater(2, 0));
}

TEST(SimpleGraph, LineGraph) {
  const auto g = line_graph(to_intersection_system(support::intervals({{0, 1}, {1, 2}, {3, 4}})));
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(PointTree, RejectsBadEdges) {
  const auto t = support::path(2);
  EXPECT_THROW(PointTreeHypergraph::make(1, t, {{1, Subtree::make(t, {0})}}), InvalidInstance);
}
