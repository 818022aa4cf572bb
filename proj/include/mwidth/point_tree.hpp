#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwidth/core.hpp"
#include "mwidth/oracle.hpp"
#include "mwidth/tree_reduction.hpp"

namespace mwidth {

// One element of the catching pool F(H): either a point singleton {x} or the
// vertex set of some edge's tree.
struct PoolElement {
  std::optional<int> point;
  std::optional<Subtree> tree;
};

// H and F(H) in one intersection system. Indices 0..|H|-1 are the edges of H;
// the pool follows (distinct points in increasing order, then distinct trees
// in order of first appearance).
struct PointTreePool {
  IntersectionSystem system;
  IndexSet targets;
  IndexSet pool;
  std::vector<PoolElement> elements;  // parallel to `pool`
};

namespace detail {

inline std::string vertex_label(const Subtree& t) {
  std::string l = "{";
  for (std::size_t i = 0; i < t.vertices().size(); ++i) l += (i ? "," : "") + std::to_string(t.vertices()[i]);
  return l + "}";
}

}  // namespace detail

inline PointTreePool pool(const PointTreeHypergraph& h) {
  const int n = h.tree.size();
  std::vector<std::vector<int>> sets;
  std::vector<std::string> labels;
  for (const auto& e : h.edges) {
    auto s = e.t.vertices();
    s.push_back(n + e.x);
    sets.push_back(std::move(s));
    labels.push_back("x" + std::to_string(e.x) + "+" + detail::vertex_label(e.t));
  }
  PointTreePool out;
  out.targets = all_indices(h.edges.size());
  std::vector<int> points;
  for (const auto& e : h.edges) points.push_back(e.x);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (int x : points) {
    sets.push_back({n + x});
    labels.push_back("x" + std::to_string(x));
    out.elements.push_back({x, std::nullopt});
  }
  std::vector<Subtree> trees;
  for (const auto& e : h.edges)
    if (std::find(trees.begin(), trees.end(), e.t) == trees.end()) trees.push_back(e.t);
  for (const auto& t : trees) {
    sets.push_back(t.vertices());
    labels.push_back(detail::vertex_label(t));
    out.elements.push_back({std::nullopt, t});
  }
  for (std::size_t i = h.edges.size(); i < sets.size(); ++i) out.pool.push_back(static_cast<int>(i));
  out.system = IntersectionSystem::from_sets(sets, std::move(labels));
  return out;
}

inline IntersectionSystem to_intersection_system(const PointTreeHypergraph& h) { return pool(h).system; }

// σ(H) = w(H, F(H)).
inline WidthCertificate sigma(const PointTreeHypergraph& h, const Limits& limits = {}) {
  const auto p = pool(h);
  return cover_width(WidthQuery(p.system, p.targets, p.pool, Relation::total()), limits);
}

// ν(H); disjoint edges have distinct points and disjoint trees.
inline std::pair<std::size_t, IndexSet> nu(const PointTreeHypergraph& h, const Limits& limits = {}) {
  const auto p = pool(h);
  return matching_number(p.system, p.targets, limits);
}

// ---------------------------------------------------------------------------
// Families of hypergraphs
// ---------------------------------------------------------------------------

struct HypergraphFamily {
  IntersectionSystem system;
  std::vector<IndexSet> members;

  static HypergraphFamily make(IntersectionSystem sys, std::vector<IndexSet> members) {
    for (auto& m : members) {
      detail::check_indices(sys, m, "hypergraph edge");
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    return {std::move(sys), std::move(members)};
  }

  IndexSet union_of(std::uint64_t subfamily) const {
    IndexSet u;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (subfamily >> i & 1) u.insert(u.end(), members[i].begin(), members[i].end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
  }
};

struct Deficiency {
  std::size_t value = 0;
  IndexSet witness;  // subfamily B with mw(⋃B) == |B| - value
};

// mw of the union of a subfamily, with the union as its own pool.
inline std::size_t union_matching_width(const HypergraphFamily& fam, std::uint64_t subfamily,
                                        const Limits& limits = {}) {
  const auto u = fam.union_of(subfamily);
  return matching_width(WidthQuery(fam.system, u, u, Relation::total()), limits).value;
}

// def(A) = max over B ⊆ A of |B| - mw(⋃B), never below 0.
inline Deficiency deficiency(const HypergraphFamily& fam, const Limits& limits = {}) {
  detail::check_cap(fam.members.size(), limits.family, "family");
  Deficiency best;
  const std::uint64_t count = 1ULL << fam.members.size();
  for (std::uint64_t b = 1; b < count; ++b) {
    const auto size = static_cast<std::size_t>(std::popcount(b));
    const auto mw = union_matching_width(fam, b, limits);
    if (size > mw && size - mw > best.value) {
      best.value = size - mw;
      best.witness = detail::unpack(b, all_indices(fam.members.size()));
    }
  }
  return best;
}

// Picks pairwise disjoint edges, one from every hypergraph not listed in
// `excluded`. Result is indexed by hypergraph; excluded slots hold -1.
inline std::optional<IndexSet> disjoint_choice(const HypergraphFamily& fam, const IndexSet& excluded,
                                               const Limits& limits = {}) {
  detail::check_cap(fam.members.size(), limits.family, "family");
  const auto k = fam.members.size();
  IndexSet choice(k, -1);
  std::vector<char> skip(k, 0);
  for (int e : excluded) {
    if (e < 0 || static_cast<std::size_t>(e) >= k) throw InvalidInstance("excluded index out of range");
    skip[e] = 1;
  }
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    if (skip[i]) return self(self, i + 1);
    for (int e : fam.members[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = choice[j] < 0 || !fam.system.meets(choice[j], e);
      if (!ok) continue;
      choice[i] = e;
      if (self(self, i + 1)) return true;
      choice[i] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return choice;
}

struct ExclusionChoice {
  IndexSet excluded;
  IndexSet choice;
};

// Smallest exclusion set (by size, then lexicographic) admitting a choice.
inline ExclusionChoice min_exclusion_choice(const HypergraphFamily& fam, const Limits& limits = {}) {
  detail::check_cap(fam.members.size(), limits.family, "family");
  const auto k = fam.members.size();
  const IndexSet all = all_indices(k);
  for (std::size_t size = 0; size <= k; ++size)
    for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      auto excluded = detail::unpack(mask, all);
      if (auto c = disjoint_choice(fam, excluded, limits)) return {std::move(excluded), std::move(*c)};
    }
  // Excluding everything always succeeds, so this is unreachable.
  throw LemmaViolation("no exclusion admits a choice");
}

// ---------------------------------------------------------------------------
// σ certificate
// ---------------------------------------------------------------------------

struct SigmaCertificate {
  IndexSet cover;  // indices into pool(h).system
  IndexSet y;      // the points whose edges are caught by trees
  std::size_t nu = 0;
  std::size_t tree_width = 0;  // w(K) == mw(K) for K = ⋃_{y∈Y} K(y)
  IndexSet tree_matching;      // matching in K attaining it, as pool indices
};

// Constructs a catching set of size at most ν(H):
//  K(x) = { V(t(e)) : x(e) = x }; pick Y ⊆ X (largest first) with
//  mw(⋃_{y∈Y} K(y)) <= |Y| - (|X| - ν); cover that subtree family optimally
//  with its own trees (w = mw for subtrees, shown by reducing it to a
//  matching), and catch every other edge by its point.
inline SigmaCertificate sigma_certificate(const PointTreeHypergraph& h, const Limits& limits = {}) {
  const auto p = pool(h);
  const auto [nu_value, nu_witness] = matching_number(p.system, p.targets, limits);
  const int xs = h.x_count;
  detail::check_cap(static_cast<std::size_t>(xs), limits.family, "point set");

  std::map<Subtree, int> pool_index_of_tree;
  std::map<int, int> pool_index_of_point;
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    if (p.elements[i].tree) pool_index_of_tree[*p.elements[i].tree] = p.pool[i];
    if (p.elements[i].point) pool_index_of_point[*p.elements[i].point] = p.pool[i];
  }

  auto trees_of = [&](std::uint64_t ymask) {
    std::vector<Subtree> out;
    for (const auto& e : h.edges)
      if ((ymask >> e.x & 1) && std::find(out.begin(), out.end(), e.t) == out.end()) out.push_back(e.t);
    return out;
  };

  const auto slack = static_cast<long>(xs) - static_cast<long>(nu_value);
  for (int size = xs; size >= 0; --size) {
    const long target = size - slack;
    if (target < 0) break;
    for (std::uint64_t ymask = 0; ymask < (1ULL << xs); ++ymask) {
      if (std::popcount(ymask) != size) continue;
      const auto k_trees = trees_of(ymask);
      const auto inst = SubtreeInstance::make(h.tree, k_trees, all_indices(k_trees.size()), Relation::total());
      const auto sys = inst.system();
      const auto all = all_indices(k_trees.size());
      const auto mw = matching_width(WidthQuery(sys, all, all, Relation::total()), limits).value;
      if (static_cast<long>(mw) > target) continue;

      const auto reduced = reduce_to_matching(inst, limits);
      if (reduced.width != mw) throw LemmaViolation("width and matching width differ on a subtree family");
      const auto tree_cover = cover_width(WidthQuery(sys, all, all, Relation::total()), limits);

      SigmaCertificate cert;
      cert.nu = nu_value;
      cert.tree_width = reduced.width;
      for (int i : reduced.matching) cert.tree_matching.push_back(pool_index_of_tree.at(k_trees[i]));
      for (int i : *tree_cover.cover_witness) cert.cover.push_back(pool_index_of_tree.at(k_trees[i]));
      for (int x = 0; x < xs; ++x) {
        if (ymask >> x & 1) {
          cert.y.push_back(x);
        } else if (auto it = pool_index_of_point.find(x); it != pool_index_of_point.end()) {
          cert.cover.push_back(it->second);
        }
      }
      std::sort(cert.cover.begin(), cert.cover.end());
      std::sort(cert.tree_matching.begin(), cert.tree_matching.end());
      return cert;
    }
  }
  throw LemmaViolation("no point subset meets the matching-width bound");
}

}  // namespace mwidth
