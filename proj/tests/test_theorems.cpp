#include <gtest/gtest.h>

#include "support.hpp"

using namespace mwidth;

TEST(Theorems, NamesRoundTrip) {
  for (auto [t, name] : theorems::kNames) {
    EXPECT_EQ(theorems::parse_theorem(name), t);
    EXPECT_EQ(theorems::name_of(t), name);
  }
  EXPECT_FALSE(theorems::parse_theorem("nonsense"));
}

class TheoremTrials : public ::testing::TestWithParam<theorems::Theorem> {};

TEST_P(TheoremTrials, SmallBatchHolds) {
  for (std::uint64_t i = 0; i < 25; ++i) {
    const auto out = theorems::run_trial(GetParam(), gen::trial_seed(11, i));
    EXPECT_TRUE(out.ok()) << out.failure << "\n" << out.instance.dump();
  }
}

INSTANTIATE_TEST_SUITE_P(All, TheoremTrials,
                         ::testing::Values(theorems::Theorem::tree_equality, theorems::Theorem::interval_equality,
                                           theorems::Theorem::imw_iw, theorems::Theorem::sigma_nu,
                                           theorems::Theorem::rho_gamma, theorems::Theorem::star_order,
                                           theorems::Theorem::deficiency_choice, theorems::Theorem::zeta_chain),
                         [](const auto& info) {
                           std::string n(theorems::name_of(info.param));
                           std::replace(n.begin(), n.end(), '-', '_');
                           return n;
                         });

TEST(Theorems, MaxSizeBoundsInstances) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto doc = theorems::generate(theorems::Theorem::imw_iw, i, 3);
    EXPECT_LE(doc["intervals"].size(), 3u);
  }
}

TEST(Theorems, ZetaChainFlagsUnequalIntervalLikeChains) {
  // a 4-cycle of edges: mw = 1 < w = 2
  const std::vector<std::vector<int>> sets{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  const auto sys = IntersectionSystem::from_sets(sets);
  EXPECT_TRUE(theorems::check_zeta_chain(sys, false).empty());
  EXPECT_FALSE(theorems::check_zeta_chain(sys, true).empty());
}

TEST(Theorems, KoenigStarPasses) {
  // all trees are singletons, so sigma must equal nu
  const auto t = support::path(1);
  const auto h = PointTreeHypergraph::make(3, t, {{0, Subtree::make(t, {0})}, {1, Subtree::make(t, {0})},
                                                   {2, Subtree::make(t, {0})}});
  EXPECT_TRUE(theorems::check_sigma_nu(h).empty());
  EXPECT_EQ(sigma(h).value, 1u);
}

TEST(Theorems, ReplaysTheFormerIwCounterexample) {
  const auto doc = io::parse(R"({"intervals":[[6,6],[13,16],[8,11],[23,24],[9,13],[9,13],[11,15],[7,8],[8,9],[11,15],[8,12]]})");
  EXPECT_EQ(theorems::check(theorems::Theorem::imw_iw, doc), "");
}
