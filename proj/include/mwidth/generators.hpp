#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "mwidth/core.hpp"
#include "mwidth/point_tree.hpp"

namespace mwidth::gen {

// SplitMix64 (Steele, Lea, Flood 2014). Every generator draws from this and
// nothing else so instances replay bit-for-bit in any language:
//   state += 0x9E3779B97F4A7C15
//   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), by rejection of the biased low range.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InvalidInstance("empty sampling range");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  // True with probability p, using the top 53 bits as a double in [0, 1).
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

 private:
  std::uint64_t state_;
};

// Seed for trial i of a batch started from `seed`.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i) {
  Rng r(seed ^ (i * 0x9E3779B97F4A7C15ULL));
  return r.next();
}

namespace detail {

// Prüfer decoding of a uniformly random sequence.
inline Tree random_tree(Rng& rng, int n) {
  if (n < 1) throw InvalidInstance("random tree needs n >= 1");
  std::vector<VertexPair> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n > 2) {
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[c];
    for (int c : code) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, c);
      --degree[leaf];
      --degree[c];
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          edges.emplace_back(u, v);
          break;
        }
      }
  }
  return validate_tree(n, std::move(edges));
}

// Grows a connected vertex set from a random root by adding random frontier
// vertices until `size` is reached.
inline Subtree random_subtree(Rng& rng, const Tree& tree, int size) {
  std::vector<int> inside{static_cast<int>(rng.below(static_cast<std::uint64_t>(tree.size())))};
  std::vector<char> in(static_cast<std::size_t>(tree.size()), 0);
  in[inside.front()] = 1;
  while (static_cast<int>(inside.size()) < size) {
    std::vector<int> frontier;
    for (int v : inside)
      for (int u : tree.neighbors(v))
        if (!in[u] && std::find(frontier.begin(), frontier.end(), u) == frontier.end()) frontier.push_back(u);
    if (frontier.empty()) break;
    std::sort(frontier.begin(), frontier.end());
    const int pick = frontier[rng.below(frontier.size())];
    in[pick] = 1;
    inside.push_back(pick);
  }
  return Subtree::make(tree, inside);
}

}  // namespace detail

inline Tree random_tree(std::uint64_t seed, int n) {
  Rng rng(seed);
  return detail::random_tree(rng, n);
}

struct SubtreeParams {
  int n = 6;
  int h2_size = 5;
  double h1_fraction = 1.0;
  Relation::Kind relation_kind = Relation::Kind::total;
  int max_subtree_size = 0;  // 0: up to n
};

inline SubtreeInstance random_subtree_instance(std::uint64_t seed, const SubtreeParams& params) {
  Rng rng(seed);
  Tree tree = detail::random_tree(rng, params.n);
  const int max_size = params.max_subtree_size > 0 ? std::min(params.max_subtree_size, params.n) : params.n;
  std::vector<Subtree> h2;
  for (int i = 0; i < params.h2_size; ++i) h2.push_back(detail::random_subtree(rng, tree, rng.between(1, max_size)));
  IndexSet h1;
  for (int i = 0; i < params.h2_size; ++i)
    if (params.h1_fraction >= 1.0 || rng.chance(params.h1_fraction)) h1.push_back(i);

  Relation rel = Relation::total();
  if (params.relation_kind == Relation::Kind::disjointness) rel = Relation::disjointness();
  if (params.relation_kind == Relation::Kind::custom) {
    std::vector<VertexPair> pairs;
    for (int i = 0; i < params.h2_size; ++i)
      for (int j = i + 1; j < params.h2_size; ++j)
        if (!h2[i].meets(h2[j]) || rng.chance(0.5)) pairs.emplace_back(i, j);
    rel = Relation::custom(pairs);
  }
  return SubtreeInstance::make(std::move(tree), std::move(h2), std::move(h1), std::move(rel));
}

struct IntervalParams {
  int count = 6;
  int coord_range = 24;
  int max_len = 6;
};

// Integer endpoints in [0, coord_range]; small ranges force endpoint ties.
inline IntervalFamily random_intervals(std::uint64_t seed, const IntervalParams& params) {
  if (params.count < 0) throw InvalidInstance("negative interval count");
  Rng rng(seed);
  IntervalFamily f;
  for (int i = 0; i < params.count; ++i) {
    const int lo = rng.between(0, params.coord_range);
    const int len = rng.between(0, params.max_len);
    f.intervals.push_back(Interval::make(lo, std::min(lo + len, params.coord_range)));
  }
  return f;
}

struct PointTreeParams {
  int x_count = 3;
  int n = 5;
  int edge_count = 5;
  bool singleton_mode = false;  // every tree is a single vertex
  int max_subtree_size = 0;     // 0: up to n
};

inline PointTreeHypergraph random_point_tree(std::uint64_t seed, const PointTreeParams& params) {
  Rng rng(seed);
  Tree tree = detail::random_tree(rng, params.n);
  const int max_size = params.singleton_mode ? 1
                       : params.max_subtree_size > 0 ? std::min(params.max_subtree_size, params.n)
                                                     : params.n;
  std::vector<PointTreeEdge> edges;
  if (params.edge_count > 0 && params.x_count < 1) throw InvalidInstance("edges need at least one point");
  for (int i = 0; i < params.edge_count; ++i) {
    const int x = rng.between(0, params.x_count - 1);
    edges.push_back({x, detail::random_subtree(rng, tree, rng.between(1, max_size))});
  }
  return PointTreeHypergraph::make(params.x_count, std::move(tree), std::move(edges));
}

// Random DAG over a random permutation (later elements above earlier ones,
// each pair kept with probability `density`), transitively closed.
inline Poset random_poset(std::uint64_t seed, int n, double density) {
  if (density < 0.0 || density > 1.0) throw InvalidInstance("density must lie in [0, 1]");
  Rng rng(seed);
  std::vector<int> perm = all_indices(static_cast<std::size_t>(n));
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
  std::vector<std::vector<char>> above(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (density >= 1.0 || rng.chance(density)) above[perm[b]][perm[a]] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (above[i][k] && above[k][j]) above[i][j] = 1;
  std::vector<VertexPair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (above[i][j]) pairs.emplace_back(i, j);
  return Poset::make(n, pairs);
}

struct FamilyParams {
  int count = 4;          // hypergraphs
  int max_edges = 4;      // per hypergraph, sampled in 0..max_edges
  int ground = 6;         // vertex set 0..ground-1
  int max_edge_size = 3;
};

// Hypergraphs over a small ground set. Identical vertex sets share one edge of
// the common system, so a repeated edge is literally the same edge.
inline HypergraphFamily random_hypergraph_family(std::uint64_t seed, const FamilyParams& params) {
  Rng rng(seed);
  std::map<std::vector<int>, int> index_of;
  std::vector<std::vector<int>> sets;
  std::vector<IndexSet> members;
  for (int h = 0; h < params.count; ++h) {
    IndexSet edges;
    const int m = rng.between(0, params.max_edges);
    for (int e = 0; e < m; ++e) {
      const int size = rng.between(1, std::min(params.max_edge_size, params.ground));
      std::vector<int> verts = all_indices(static_cast<std::size_t>(params.ground));
      for (int i = 0; i < size; ++i)
        std::swap(verts[i], verts[i + static_cast<int>(rng.below(static_cast<std::uint64_t>(params.ground - i)))]);
      verts.resize(static_cast<std::size_t>(size));
      std::sort(verts.begin(), verts.end());
      auto [it, fresh] = index_of.try_emplace(verts, static_cast<int>(sets.size()));
      if (fresh) sets.push_back(verts);
      edges.push_back(it->second);
    }
    members.push_back(std::move(edges));
  }
  std::vector<std::string> labels;
  for (const auto& s : sets) {
    std::string l = "{";
    for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + std::to_string(s[i]);
    labels.push_back(l + "}");
  }
  return HypergraphFamily::make(IntersectionSystem::from_sets(sets, std::move(labels)), std::move(members));
}

}  // namespace mwidth::gen
