#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "mwidth/core.hpp"
#include "mwidth/oracle.hpp"

namespace mwidth {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// All-pairs BFS distances; kUnreachable across components.
inline std::vector<std::vector<int>> distances(const SimpleGraph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kUnreachable));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u) && dist[s][u] == kUnreachable) {
          dist[s][u] = dist[s][v] + 1;
          q.push(u);
        }
    }
  }
  return dist;
}

// G^{*k}: u ~ v iff 1 <= dist(u, v) <= k.
inline SimpleGraph graph_power(const SimpleGraph& g, int k) {
  if (k < 1) throw InvalidInstance("graph power needs k >= 1");
  const auto dist = distances(g);
  SimpleGraph out(g.size());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (dist[u][v] <= k) out.add_edge(u, v);
  return out;
}

struct IndependentSet {
  std::size_t value = 0;
  IndexSet witness;
};

struct CliqueCover {
  std::size_t value = 0;
  std::vector<IndexSet> groups;
};

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<std::uint64_t> adj(g.size(), 0);
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v)
      if (g.adjacent(u, v)) adj[u] |= 1ULL << v;
  return adj;
}

inline IndependentSet max_independent_set(const SimpleGraph& g, const Limits& limits) {
  check_cap(static_cast<std::size_t>(g.size()), limits.graph, "graph");
  const auto adj = adjacency_masks(g);
  std::uint64_t best = 0;
  auto rec = [&](auto&& self, std::uint64_t chosen, std::uint64_t open) -> void {
    if (std::popcount(chosen) + std::popcount(open) <= std::popcount(best)) return;
    if (open == 0) {
      best = chosen;
      return;
    }
    const int v = lowest(open);
    self(self, chosen | 1ULL << v, open & ~adj[v] & ~(1ULL << v));
    self(self, chosen, open & ~(1ULL << v));
  };
  const int n = g.size();
  rec(rec, 0, n == 64 ? ~0ULL : ((1ULL << n) - 1));
  IndependentSet out;
  for (std::uint64_t m = best; m; m &= m - 1) out.witness.push_back(lowest(m));
  out.value = out.witness.size();
  return out;
}

// Minimum partition of V(g) into cliques, i.e. an exact colouring of the
// complement. Vertices are placed in index order; a vertex either joins an
// existing group it is fully adjacent to or opens a new one.
inline CliqueCover min_clique_cover(const SimpleGraph& g, const Limits& limits) {
  check_cap(static_cast<std::size_t>(g.size()), limits.graph, "graph");
  const int n = g.size();
  const auto adj = adjacency_masks(g);
  std::vector<std::uint64_t> groups, best_groups;
  std::size_t best = static_cast<std::size_t>(n) + 1;
  auto rec = [&](auto&& self, int v) -> void {
    if (groups.size() >= best) return;
    if (v == n) {
      best = groups.size();
      best_groups = groups;
      return;
    }
    for (std::size_t g = 0; g < groups.size(); ++g)
      if ((groups[g] & ~adj[v]) == 0) {
        groups[g] |= 1ULL << v;
        self(self, v + 1);
        groups[g] &= ~(1ULL << v);
      }
    groups.push_back(1ULL << v);
    self(self, v + 1);
    groups.pop_back();
  };
  rec(rec, 0);
  CliqueCover out;
  for (auto m : best_groups) {
    IndexSet grp;
    for (; m; m &= m - 1) grp.push_back(lowest(m));
    out.groups.push_back(std::move(grp));
  }
  out.value = out.groups.size();
  return out;
}

}  // namespace detail

// γ_k: largest vertex set with pairwise distance > k.
inline IndependentSet gamma_k(const SimpleGraph& g, int k, const Limits& limits = {}) {
  return detail::max_independent_set(graph_power(g, k), limits);
}

// ρ_k: fewest vertex sets of diameter <= k covering V(G), realised as a minimum
// clique partition of G^{*k}.
inline CliqueCover rho_k(const SimpleGraph& g, int k, const Limits& limits = {}) {
  return detail::min_clique_cover(graph_power(g, k), limits);
}

inline SimpleGraph incomparability_graph(const Poset& p) {
  SimpleGraph g(p.size());
  for (int u = 0; u < p.size(); ++u)
    for (int v = u + 1; v < p.size(); ++v)
      if (!p.comparable(u, v)) g.add_edge(u, v);
  return g;
}

// i ≻ j iff interval i lies entirely to the right of interval j.
inline Poset interval_order(const IntervalFamily& family) {
  std::vector<VertexPair> pairs;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      if (family[i].lo > family[j].hi) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Poset::make(static_cast<int>(family.size()), pairs);
}

// Given ≻ whose incomparability graph is g, builds ⊐ = { (x, y) : x ≻ y and
// dist_g(x, y) > k }. The result must again be a strict order whose
// incomparability graph is G^{*k}; both facts are checked here.
inline Poset star_order(const Poset& order, const SimpleGraph& g, int k) {
  if (incomparability_graph(order) != g) throw PosetMismatch("order does not realise the given graph");
  const auto power = graph_power(g, k);
  std::vector<VertexPair> pairs;
  for (int x = 0; x < order.size(); ++x)
    for (int y = 0; y < order.size(); ++y)
      if (order.greater(x, y) && !power.adjacent(x, y)) pairs.emplace_back(x, y);
  Poset result = [&] {
    try {
      return Poset::make(order.size(), pairs);
    } catch (const NotAPartialOrder& e) {
      throw LemmaViolation(std::string("star order is not a partial order: ") + e.what());
    }
  }();
  if (incomparability_graph(result) != power)
    throw LemmaViolation("incomparability graph of the star order differs from G^{*k}");
  return result;
}

}  // namespace mwidth
