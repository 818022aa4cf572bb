#include <gtest/gtest.h>

#include "support.hpp"

using namespace mwidth;
using io::json;

TEST(Json, DetectKind) {
  EXPECT_EQ(io::detect_kind(json::parse(R"({"intervals":[]})")), io::InstanceKind::intervals);
  EXPECT_EQ(io::detect_kind(json::parse(R"({"tree":{},"h2":[]})")), io::InstanceKind::subtree);
  EXPECT_EQ(io::detect_kind(json::parse(R"({"x_count":1})")), io::InstanceKind::point_tree);
  EXPECT_EQ(io::detect_kind(json::parse(R"({"n":2,"less":[]})")), io::InstanceKind::poset);
  EXPECT_EQ(io::detect_kind(json::parse(R"({"n":2,"edges":[]})")), io::InstanceKind::graph);
  EXPECT_EQ(io::detect_kind(json::parse(R"({"m":1,"meets":[],"members":[]})")), io::InstanceKind::family);
  EXPECT_THROW(io::detect_kind(json::parse(R"({"foo":1})")), ParseError);
  EXPECT_THROW(io::detect_kind(json::parse("[1]")), ParseError);
  EXPECT_THROW(io::parse("{"), ParseError);
}

TEST(Json, Rationals) {
  const auto f = io::interval_family_from_json(json::parse(R"({"intervals":[["1/2",1],["6/4",2]]})"));
  EXPECT_EQ(f[0].lo, Rational(1, 2));
  EXPECT_EQ(f[1].lo, Rational(3, 2));
  EXPECT_EQ(io::interval_family_to_json(f).dump(), R"({"intervals":[["1/2",1],["3/2",2]]})");
}

TEST(Json, IntervalErrors) {
  EXPECT_THROW(io::interval_family_from_json(json::parse(R"({"intervals":[[2,1]]})")), InvalidInterval);
  EXPECT_THROW(io::interval_family_from_json(json::parse(R"({"intervals":[[1]]})")), ParseError);
  EXPECT_THROW(io::interval_family_from_json(json::parse(R"({"intervals":[["a/b",1]]})")), ParseError);
  EXPECT_THROW(io::interval_family_from_json(json::parse(R"({"intervals":[["1/0",1]]})")), ParseError);
  EXPECT_THROW(io::interval_family_from_json(json::parse(R"({"intervals":[[1.5,2]]})")), ParseError);
}

TEST(Json, SubtreeInstanceRoundTrip) {
  const auto text =
      R"({"tree":{"n":3,"edges":[[0,1],[1,2]]},"h2":[[0,1],[1,2],[2]],"h1":[0,2],)"
      R"("relation":{"kind":"custom","pairs":[[0,2],[1,2]]}})";
  const auto inst = io::subtree_instance_from_json(json::parse(text));
  EXPECT_EQ(inst.h1, (IndexSet{0, 2}));
  EXPECT_EQ(inst.relation.kind(), Relation::Kind::custom);
  EXPECT_EQ(io::subtree_instance_to_json(inst).dump(), json::parse(text).dump());
}

TEST(Json, SubtreeDefaults) {
  const auto inst = io::subtree_instance_from_json(json::parse(R"({"tree":{"n":2,"edges":[[0,1]]},"h2":[[0],[1]]})"));
  EXPECT_EQ(inst.h1, (IndexSet{0, 1}));
  EXPECT_EQ(inst.relation.kind(), Relation::Kind::total);
}

TEST(Json, SubtreeErrors) {
  EXPECT_THROW(io::subtree_instance_from_json(json::parse(R"({"tree":{"n":3,"edges":[[0,1],[1,2]]},"h2":[[0,2]]})")),
               NotASubtree);
  EXPECT_THROW(io::subtree_instance_from_json(json::parse(R"({"tree":{"n":3,"edges":[[0,1]]},"h2":[]})")), NotATree);
  EXPECT_THROW(io::subtree_instance_from_json(
                   json::parse(R"({"tree":{"n":2,"edges":[[0,1]]},"h2":[[0],[1]],"relation":{"kind":"odd"}})")),
               ParseError);
  EXPECT_THROW(io::subtree_instance_from_json(json::parse(R"({"tree":{"n":2,"edges":[[0,1]]},"h2":"x"})")), ParseError);
}

TEST(Json, PointTreeRoundTrip) {
  const auto text = R"({"x_count":2,"tree":{"n":2,"edges":[[0,1]]},"edges":[{"x":0,"t":[0]},{"x":1,"t":[0,1]}]})";
  const auto h = io::point_tree_from_json(json::parse(text));
  EXPECT_EQ(h.edges.size(), 2u);
  EXPECT_EQ(io::point_tree_to_json(h).dump(), text);
  EXPECT_THROW(io::point_tree_from_json(json::parse(R"({"x_count":1,"tree":{"n":1,"edges":[]},"edges":[{"x":3,"t":[0]}]})")),
               InvalidInstance);
}

TEST(Json, PosetAndGraph) {
  const auto p = io::poset_from_json(json::parse(R"({"n":3,"less":[[0,1],[1,2],[0,2]]})"));
  EXPECT_TRUE(p.greater(0, 2));
  EXPECT_THROW(io::poset_from_json(json::parse(R"({"n":3,"less":[[0,1],[1,2]]})")), NotAPartialOrder);
  const auto g = io::graph_from_json(json::parse(R"({"n":3,"edges":[[0,1]]})"));
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_EQ(io::graph_to_json(g).dump(), R"({"n":3,"edges":[[0,1]]})");
  EXPECT_THROW(io::graph_from_json(json::parse(R"({"n":-1,"edges":[]})")), ParseError);
}

TEST(Json, FamilyRoundTrip) {
  const auto text = R"({"m":3,"meets":[[0,1]],"members":[[0],[1,2],[]]})";
  const auto fam = io::family_from_json(json::parse(text));
  EXPECT_TRUE(fam.system.meets(0, 1));
  EXPECT_FALSE(fam.system.meets(1, 2));
  EXPECT_EQ(io::family_to_json(fam).dump(), text);
  EXPECT_THROW(io::family_from_json(json::parse(R"({"m":1,"meets":[[0,4]],"members":[]})")), ParseError);
}

TEST(Json, GeneratedInstancesRoundTrip) {
  for (auto t : {theorems::Theorem::tree_equality, theorems::Theorem::imw_iw, theorems::Theorem::sigma_nu,
                 theorems::Theorem::rho_gamma, theorems::Theorem::deficiency_choice})
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto doc = theorems::generate(t, seed, 0);
      const auto again = io::parse(doc.dump());
      EXPECT_EQ(again.dump(), doc.dump());
      EXPECT_NO_THROW(theorems::check(t, again));
    }
}
