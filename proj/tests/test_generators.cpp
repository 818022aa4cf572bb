#include <gtest/gtest.h>

#include "support.hpp"

using namespace mwidth;

TEST(Rng, SplitMixReferenceValues) {
  // first outputs of SplitMix64 seeded with 0
  gen::Rng r(0);
  EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(r.next(), 0x06C45D188009454FULL);
}

TEST(Rng, BoundsAndErrors) {
  gen::Rng r(42);
  for (int i = 0; i < 1000; ++i) {
    const auto b = r.between(-3, 3);
    EXPECT_GE(b, -3);
    EXPECT_LE(b, 3);
    EXPECT_LT(r.below(7), 7u);
  }
  EXPECT_THROW(r.below(0), InvalidInstance);
}

TEST(TrialSeed, DistinctPerTrial) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(gen::trial_seed(7, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(gen::trial_seed(7, 3), gen::trial_seed(7, 3));
}

TEST(RandomTree, SmallCases) {
  EXPECT_TRUE(gen::random_tree(1, 1).edges().empty());
  const auto t2 = gen::random_tree(5, 2);
  ASSERT_EQ(t2.edges().size(), 1u);
  EXPECT_EQ(std::min(t2.edges()[0].first, t2.edges()[0].second), 0);
  EXPECT_EQ(std::max(t2.edges()[0].first, t2.edges()[0].second), 1);
  EXPECT_THROW(gen::random_tree(1, 0), InvalidInstance);
}

TEST(RandomTree, DeterministicAndValid) {
  const auto a = io::tree_to_json(gen::random_tree(123, 8));
  const auto b = io::tree_to_json(gen::random_tree(123, 8));
  EXPECT_EQ(a.dump(), b.dump());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = gen::random_tree(seed, 1 + static_cast<int>(seed % 12));
    EXPECT_NO_THROW(validate_tree(t.size(), t.edges()));
  }
}

TEST(RandomTree, CoversManyLabelledTrees) {
  // 4 vertices have 16 labelled trees; Prüfer decoding should reach all
  std::set<std::string> shapes;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    auto e = gen::random_tree(seed, 4).edges();
    for (auto& p : e)
      if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(e.begin(), e.end());
    shapes.insert(io::detail::pairs_to(e).dump());
  }
  EXPECT_EQ(shapes.size(), 16u);
}

TEST(RandomSubtreeInstance, Params) {
  gen::SubtreeParams p;
  p.n = 6;
  p.h2_size = 6;
  p.h1_fraction = 1.0;
  p.relation_kind = Relation::Kind::disjointness;
  const auto inst = gen::random_subtree_instance(9, p);
  EXPECT_EQ(inst.h1, all_indices(6));
  EXPECT_EQ(inst.relation.kind(), Relation::Kind::disjointness);
  const auto sys = inst.system();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) {
        EXPECT_EQ(inst.relation.related(sys, i, j), !sys.meets(i, j));
      }
}

TEST(RandomSubtreeInstance, ReplayAndValidity) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::SubtreeParams p;
    p.n = 1 + static_cast<int>(seed % 9);
    p.h2_size = static_cast<int>(seed % 9);
    p.h1_fraction = 0.5;
    p.relation_kind = static_cast<Relation::Kind>(seed % 3);
    const auto a = io::subtree_instance_to_json(gen::random_subtree_instance(seed, p));
    EXPECT_EQ(a.dump(), io::subtree_instance_to_json(gen::random_subtree_instance(seed, p)).dump());
    EXPECT_NO_THROW(io::subtree_instance_from_json(a));
  }
}

TEST(RandomIntervals, Params) {
  EXPECT_TRUE(gen::random_intervals(1, {0, 10, 3}).empty());
  EXPECT_EQ(gen::random_intervals(1, {1, 10, 3}).size(), 1u);
  const auto f = gen::random_intervals(77, {11, 24, 8});
  EXPECT_EQ(io::interval_family_to_json(f).dump(),
            io::interval_family_to_json(gen::random_intervals(77, {11, 24, 8})).dump());
  for (const auto& iv : f.intervals) {
    EXPECT_GE(iv.lo, Rational(0));
    EXPECT_LE(iv.hi, Rational(24));
    EXPECT_LE(iv.lo, iv.hi);
  }
  EXPECT_THROW(gen::random_intervals(1, {-1, 10, 3}), InvalidInstance);
}

TEST(RandomPointTree, Params) {
  gen::PointTreeParams p;
  p.edge_count = 0;
  EXPECT_TRUE(gen::random_point_tree(3, p).edges.empty());
  p.edge_count = 8;
  p.singleton_mode = true;
  for (const auto& e : gen::random_point_tree(3, p).edges) EXPECT_EQ(e.t.vertices().size(), 1u);
  EXPECT_EQ(io::point_tree_to_json(gen::random_point_tree(3, p)).dump(),
            io::point_tree_to_json(gen::random_point_tree(3, p)).dump());
}

TEST(RandomPoset, Density) {
  const auto anti = gen::random_poset(4, 6, 0.0);
  EXPECT_TRUE(anti.pairs().empty());
  const auto chain = gen::random_poset(4, 6, 1.0);
  EXPECT_EQ(chain.pairs().size(), 15u);
  EXPECT_TRUE(incomparability_graph(chain).edges().empty());
  EXPECT_THROW(gen::random_poset(4, 6, 1.5), InvalidInstance);
  EXPECT_EQ(io::poset_to_json(gen::random_poset(8, 7, 0.4)).dump(),
            io::poset_to_json(gen::random_poset(8, 7, 0.4)).dump());
}

TEST(RandomFamily, SharedEdges) {
  gen::FamilyParams p;
  p.count = 6;
  p.ground = 2;
  p.max_edge_size = 1;
  const auto fam = gen::random_hypergraph_family(11, p);
  EXPECT_LE(fam.system.size(), 2u);
  EXPECT_EQ(fam.members.size(), 6u);
}
