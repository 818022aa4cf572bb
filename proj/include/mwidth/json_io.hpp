#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "mwidth/core.hpp"
#include "mwidth/point_tree.hpp"

// JSON encodings of every instance type:
//   Tree                {"n":int,"edges":[[u,v],...]}
//   SubtreeInstance     {"tree":Tree,"h2":[[v,...],...],"h1":[i,...],
//                        "relation":{"kind":"total"|"disjointness"|"custom","pairs":[[i,j],...]}}
//   IntervalFamily      {"intervals":[[lo,hi],...]}  endpoints: integers or "p/q"
//   PointTreeHypergraph {"x_count":int,"tree":Tree,"edges":[{"x":i,"t":[v,...]},...]}
//   Poset               {"n":int,"less":[[i,j],...]}  pair [i,j] means i ≻ j
//   SimpleGraph         {"n":int,"edges":[[u,v],...]}
//   HypergraphFamily    {"m":int,"meets":[[i,j],...],"members":[[e,...],...]}
//                        (meets lists the off-diagonal meeting pairs, i < j)
namespace mwidth::io {

using json = nlohmann::ordered_json;

enum class InstanceKind { subtree, intervals, point_tree, poset, graph, family };

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

inline std::vector<VertexPair> pairs_from(const json& j) {
  std::vector<VertexPair> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("expected a pair [i,j]");
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

inline json pairs_to(const std::vector<VertexPair>& pairs) {
  json out = json::array();
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace detail

inline InstanceKind detect_kind(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (j.contains("intervals")) return InstanceKind::intervals;
  if (j.contains("h2")) return InstanceKind::subtree;
  if (j.contains("x_count")) return InstanceKind::point_tree;
  if (j.contains("less")) return InstanceKind::poset;
  if (j.contains("members")) return InstanceKind::family;
  if (j.contains("n") && j.contains("edges")) return InstanceKind::graph;
  throw ParseError("unrecognised instance shape");
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Rationals --------------------------------------------------------------

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("endpoint must be an integer or a \"p/q\" string");
}

inline json rational_to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

// Trees ------------------------------------------------------------------

inline Tree tree_from_json(const json& j) {
  return detail::guarded("tree", [&] { return validate_tree(j.at("n").get<int>(), detail::pairs_from(j.at("edges"))); });
}

inline json tree_to_json(const Tree& t) { return json{{"n", t.size()}, {"edges", detail::pairs_to(t.edges())}}; }

// Relations --------------------------------------------------------------

inline Relation relation_from_json(const json& j) {
  return detail::guarded("relation", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "total") return Relation::total();
    if (kind == "disjointness") return Relation::disjointness();
    if (kind == "custom") return Relation::custom(detail::pairs_from(j.value("pairs", json::array())));
    throw ParseError("unknown relation kind '" + kind + "'");
  });
}

inline json relation_to_json(const Relation& r) {
  json out{{"kind", to_string(r.kind())}};
  if (r.kind() == Relation::Kind::custom)
    out["pairs"] = detail::pairs_to(std::vector<VertexPair>(r.pairs().begin(), r.pairs().end()));
  return out;
}

// Subtree instances ------------------------------------------------------

inline SubtreeInstance subtree_instance_from_json(const json& j) {
  return detail::guarded("subtree instance", [&] {
    Tree tree = tree_from_json(j.at("tree"));
    std::vector<Subtree> h2;
    for (const auto& s : j.at("h2")) h2.push_back(Subtree::make(tree, s.get<std::vector<int>>()));
    IndexSet h1 = j.contains("h1") ? j.at("h1").get<IndexSet>() : all_indices(h2.size());
    Relation rel = j.contains("relation") ? relation_from_json(j.at("relation")) : Relation::total();
    return SubtreeInstance::make(std::move(tree), std::move(h2), std::move(h1), std::move(rel));
  });
}

inline json subtree_instance_to_json(const SubtreeInstance& inst) {
  json h2 = json::array();
  for (const auto& s : inst.h2) h2.push_back(s.vertices());
  return json{{"tree", tree_to_json(inst.tree)},
              {"h2", h2},
              {"h1", inst.h1},
              {"relation", relation_to_json(inst.relation)}};
}

// Interval families ------------------------------------------------------

inline IntervalFamily interval_family_from_json(const json& j) {
  return detail::guarded("interval family", [&] {
    IntervalFamily f;
    for (const auto& iv : j.at("intervals")) {
      if (!iv.is_array() || iv.size() != 2) throw ParseError("interval must be [lo,hi]");
      f.intervals.push_back(Interval::make(rational_from_json(iv[0]), rational_from_json(iv[1])));
    }
    return f;
  });
}

inline json interval_family_to_json(const IntervalFamily& f) {
  json arr = json::array();
  for (const auto& iv : f.intervals) arr.push_back({rational_to_json(iv.lo), rational_to_json(iv.hi)});
  return json{{"intervals", arr}};
}

// Point-tree hypergraphs -------------------------------------------------

inline PointTreeHypergraph point_tree_from_json(const json& j) {
  return detail::guarded("point-tree hypergraph", [&] {
    Tree tree = tree_from_json(j.at("tree"));
    std::vector<PointTreeEdge> edges;
    for (const auto& e : j.at("edges"))
      edges.push_back({e.at("x").get<int>(), Subtree::make(tree, e.at("t").get<std::vector<int>>())});
    return PointTreeHypergraph::make(j.at("x_count").get<int>(), std::move(tree), std::move(edges));
  });
}

inline json point_tree_to_json(const PointTreeHypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.edges) edges.push_back(json{{"x", e.x}, {"t", e.t.vertices()}});
  return json{{"x_count", h.x_count}, {"tree", tree_to_json(h.tree)}, {"edges", edges}};
}

// Posets and graphs ------------------------------------------------------

inline Poset poset_from_json(const json& j) {
  return detail::guarded("poset", [&] { return Poset::make(j.at("n").get<int>(), detail::pairs_from(j.at("less"))); });
}

inline json poset_to_json(const Poset& p) { return json{{"n", p.size()}, {"less", detail::pairs_to(p.pairs())}}; }

inline SimpleGraph graph_from_json(const json& j) {
  return detail::guarded("graph", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0) throw ParseError("negative vertex count");
    return SimpleGraph::from_edges(n, detail::pairs_from(j.at("edges")));
  });
}

inline json graph_to_json(const SimpleGraph& g) { return json{{"n", g.size()}, {"edges", detail::pairs_to(g.edges())}}; }

// Hypergraph families ----------------------------------------------------

inline HypergraphFamily family_from_json(const json& j) {
  return detail::guarded("hypergraph family", [&] {
    const auto m = j.at("m").get<std::size_t>();
    std::vector<char> meets(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) meets[i * m + i] = 1;
    for (auto [a, b] : detail::pairs_from(j.at("meets"))) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= m || static_cast<std::size_t>(b) >= m)
        throw ParseError("meets pair out of range");
      meets[a * m + b] = meets[b * m + a] = 1;
    }
    std::vector<IndexSet> members;
    for (const auto& h : j.at("members")) members.push_back(h.get<IndexSet>());
    return HypergraphFamily::make(IntersectionSystem(m, std::move(meets)), std::move(members));
  });
}

inline json family_to_json(const HypergraphFamily& fam) {
  std::vector<VertexPair> meets;
  const auto m = fam.system.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (fam.system.meets(i, j)) meets.emplace_back(static_cast<int>(i), static_cast<int>(j));
  json members = json::array();
  for (const auto& h : fam.members) members.push_back(h);
  return json{{"m", m}, {"meets", detail::pairs_to(meets)}, {"members", members}};
}

}  // namespace mwidth::io
