#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mwidth/error.hpp"
#include "mwidth/rational.hpp"

namespace mwidth {

using IndexSet = std::vector<int>;
using VertexPair = std::pair<int, int>;

// ---------------------------------------------------------------------------
// Trees and subtrees
// ---------------------------------------------------------------------------

class Tree {
 public:
  int size() const { return n_; }
  const std::vector<VertexPair>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

  friend bool operator==(const Tree& a, const Tree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  friend Tree validate_tree(int n, std::vector<VertexPair> edges);
  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<int>> adj_;
};

// Builds a Tree after checking that the edges form a spanning tree on 0..n-1.
// Edge order is kept as given.
inline Tree validate_tree(int n, std::vector<VertexPair> edges) {
  if (n < 1) throw NotATree("a tree needs at least one vertex");
  if (edges.size() != static_cast<std::size_t>(n - 1))
    throw NotATree("expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::set<VertexPair> seen;
  Tree t;
  t.n_ = n;
  t.adj_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw NotATree("edge endpoint out of range");
    if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) throw NotATree("duplicate edge");
    const int ru = find(u), rv = find(v);
    if (ru == rv) throw NotATree("edges contain a cycle");
    parent[ru] = rv;
    t.adj_[u].push_back(v);
    t.adj_[v].push_back(u);
  }
  t.edges_ = std::move(edges);
  return t;
}

// True iff `vertices` is nonempty and induces a connected subgraph of `tree`.
inline bool is_subtree(const Tree& tree, std::span<const int> vertices) {
  for (int v : vertices)
    if (v < 0 || v >= tree.size()) throw VertexOutOfRange("vertex " + std::to_string(v) + " not in tree");
  if (vertices.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(tree.size()), 0), seen(in.size(), 0);
  for (int v : vertices) in[v] = 1;
  std::vector<int> stack{vertices.front()};
  seen[vertices.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int u : tree.neighbors(v))
      if (in[u] && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  const auto distinct = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
  return reached == distinct;
}

// Vertex set of a connected subgraph of a host tree, stored sorted.
class Subtree {
 public:
  static Subtree make(const Tree& host, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (!is_subtree(host, vertices)) throw NotASubtree("vertex set does not induce a connected subtree");
    Subtree s;
    s.vertices_ = std::move(vertices);
    return s;
  }

  const std::vector<int>& vertices() const { return vertices_; }

  bool meets(const Subtree& other) const {
    auto a = vertices_.begin(), b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
      if (*a == *b) return true;
      *a < *b ? ++a : ++b;
    }
    return false;
  }

  friend bool operator==(const Subtree&, const Subtree&) = default;
  friend auto operator<=>(const Subtree&, const Subtree&) = default;

 private:
  std::vector<int> vertices_;
};

// ---------------------------------------------------------------------------
// Intersection systems
// ---------------------------------------------------------------------------

// The "edge i meets edge j" structure of a hypergraph, detached from what the
// edges are. Every width solver works on this.
class IntersectionSystem {
 public:
  IntersectionSystem() = default;

  IntersectionSystem(std::size_t m, std::vector<char> meets, std::vector<std::string> labels = {})
      : m_(m), meets_(std::move(meets)), labels_(std::move(labels)) {
    if (meets_.size() != m_ * m_) throw InvalidInstance("meets matrix has wrong size");
    if (labels_.empty()) {
      labels_.reserve(m_);
      for (std::size_t i = 0; i < m_; ++i) labels_.push_back("e" + std::to_string(i));
    }
    if (labels_.size() != m_) throw InvalidInstance("label count does not match edge count");
    for (std::size_t i = 0; i < m_; ++i) {
      if (!meets_[i * m_ + i]) throw InvalidInstance("meets must be reflexive");
      for (std::size_t j = 0; j < i; ++j)
        if (meets_[i * m_ + j] != meets_[j * m_ + i]) throw InvalidInstance("meets must be symmetric");
    }
  }

  // Edges given as sets of ground elements; sets must be sorted and nonempty.
  static IntersectionSystem from_sets(std::span<const std::vector<int>> sets,
                                      std::vector<std::string> labels = {}) {
    const std::size_t m = sets.size();
    std::vector<char> meets(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (sets[i].empty()) throw InvalidInstance("empty edge");
      for (std::size_t j = i; j < m; ++j) {
        const bool hit = sorted_sets_meet(sets[i], sets[j]);
        meets[i * m + j] = meets[j * m + i] = hit;
      }
    }
    return IntersectionSystem(m, std::move(meets), std::move(labels));
  }

  std::size_t size() const { return m_; }
  bool meets(std::size_t i, std::size_t j) const { return meets_[i * m_ + j] != 0; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Two systems are equal when their intersection patterns agree; labels are
  // descriptive only.
  friend bool operator==(const IntersectionSystem& a, const IntersectionSystem& b) {
    return a.m_ == b.m_ && a.meets_ == b.meets_;
  }

  static bool sorted_sets_meet(const std::vector<int>& a, const std::vector<int>& b) {
    auto x = a.begin(), y = b.begin();
    while (x != a.end() && y != b.end()) {
      if (*x == *y) return true;
      *x < *y ? ++x : ++y;
    }
    return false;
  }

 private:
  std::size_t m_ = 0;
  std::vector<char> meets_;
  std::vector<std::string> labels_;
};

inline IndexSet all_indices(std::size_t m) {
  IndexSet out(m);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

// Symmetric relation over the edges of an IntersectionSystem. Only pairs of
// distinct edges are ever consulted.
class Relation {
 public:
  enum class Kind { total, disjointness, custom };

  static Relation total() { return Relation(Kind::total, {}); }
  static Relation disjointness() { return Relation(Kind::disjointness, {}); }
  static Relation custom(std::span<const VertexPair> pairs) {
    std::set<VertexPair> stored;
    for (auto [i, j] : pairs) {
      if (i < 0 || j < 0) throw InvalidRelation("negative index in relation");
      if (i != j) stored.insert(std::minmax(i, j));
    }
    return Relation(Kind::custom, std::move(stored));
  }

  Kind kind() const { return kind_; }
  const std::set<VertexPair>& pairs() const { return pairs_; }

  bool related(const IntersectionSystem& sys, int i, int j) const {
    if (i == j) return true;
    switch (kind_) {
      case Kind::total: return true;
      case Kind::disjointness: return !sys.meets(i, j);
      case Kind::custom: return pairs_.count(std::minmax(i, j)) > 0;
    }
    return false;
  }

  // Every disjoint pair among `over` is related.
  bool contains_disjointness(const IntersectionSystem& sys, std::span<const int> over) const {
    for (std::size_t a = 0; a < over.size(); ++a)
      for (std::size_t b = a + 1; b < over.size(); ++b)
        if (!sys.meets(over[a], over[b]) && !related(sys, over[a], over[b])) return false;
    return true;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  Relation(Kind k, std::set<VertexPair> pairs) : kind_(k), pairs_(std::move(pairs)) {}
  Kind kind_;
  std::set<VertexPair> pairs_;
};

inline const char* to_string(Relation::Kind k) {
  switch (k) {
    case Relation::Kind::total: return "total";
    case Relation::Kind::disjointness: return "disjointness";
    case Relation::Kind::custom: return "custom";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Subtree instances
// ---------------------------------------------------------------------------

// Families H1 ⊆ H2 of subtrees of one host tree plus a relation on H2 that
// contains the disjointness relation.
struct SubtreeInstance {
  Tree tree;
  std::vector<Subtree> h2;
  IndexSet h1;
  Relation relation = Relation::total();

  IntersectionSystem system() const {
    std::vector<std::vector<int>> sets;
    std::vector<std::string> labels;
    for (const auto& s : h2) {
      sets.push_back(s.vertices());
      std::string l = "{";
      for (std::size_t i = 0; i < s.vertices().size(); ++i) l += (i ? "," : "") + std::to_string(s.vertices()[i]);
      labels.push_back(l + "}");
    }
    return IntersectionSystem::from_sets(sets, std::move(labels));
  }

  static SubtreeInstance make(Tree tree, std::vector<Subtree> h2, IndexSet h1, Relation relation) {
    SubtreeInstance inst{std::move(tree), std::move(h2), std::move(h1), std::move(relation)};
    inst.validate();
    return inst;
  }

  void validate() const {
    const auto m = static_cast<int>(h2.size());
    for (const auto& s : h2) {
      for (int v : s.vertices())
        if (v >= tree.size()) throw VertexOutOfRange("subtree vertex outside host tree");
      if (!is_subtree(tree, s.vertices())) throw NotASubtree("h2 member is not a subtree of the host");
    }
    std::set<int> unique;
    for (int i : h1) {
      if (i < 0 || i >= m) throw InvalidInstance("h1 index out of range");
      if (!unique.insert(i).second) throw InvalidInstance("duplicate h1 index");
    }
    for (auto [i, j] : relation.pairs())
      if (j >= m) throw InvalidRelation("relation pair out of range");
    const auto sys = system();
    if (!relation.contains_disjointness(sys, all_indices(h2.size())))
      throw InvalidRelation("relation does not contain the disjointness relation");
  }
};

// ---------------------------------------------------------------------------
// Intervals
// ---------------------------------------------------------------------------

// Closed interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  static Interval make(Rational lo, Rational hi) {
    if (hi < lo) throw InvalidInterval("interval with lo > hi: [" + lo.str() + "," + hi.str() + "]");
    return {lo, hi};
  }

  bool meets(const Interval& o) const { return std::max(lo, o.lo) <= std::min(hi, o.hi); }
  std::string str() const { return "[" + lo.str() + "," + hi.str() + "]"; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalFamily {
  std::vector<Interval> intervals;

  std::size_t size() const { return intervals.size(); }
  bool empty() const { return intervals.empty(); }
  const Interval& operator[](std::size_t i) const { return intervals[i]; }
  friend bool operator==(const IntervalFamily&, const IntervalFamily&) = default;
};

inline IntersectionSystem to_intersection_system(const IntervalFamily& family) {
  const std::size_t m = family.size();
  std::vector<char> meets(m * m, 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(family[i].str());
    for (std::size_t j = i; j < m; ++j) meets[i * m + j] = meets[j * m + i] = family[i].meets(family[j]);
  }
  return IntersectionSystem(m, std::move(meets), std::move(labels));
}

inline IntersectionSystem to_intersection_system(const SubtreeInstance& instance) { return instance.system(); }

// Replaces every endpoint by its rank in the order (value, left-before-right,
// interval index). Ranks run 1..2m. A left endpoint tied with a right endpoint
// stays to its left, so touching intervals still meet, and strict gaps stay
// strict; the intersection pattern is unchanged.
inline IntervalFamily make_endpoints_distinct(const IntervalFamily& family) {
  struct Occurrence {
    Rational value;
    int type;  // 0 = left, 1 = right
    std::size_t index;
  };
  std::vector<Occurrence> occ;
  occ.reserve(2 * family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    occ.push_back({family[i].lo, 0, i});
    occ.push_back({family[i].hi, 1, i});
  }
  std::sort(occ.begin(), occ.end(), [](const Occurrence& a, const Occurrence& b) {
    return std::tie(a.value, a.type, a.index) < std::tie(b.value, b.type, b.index);
  });
  IntervalFamily out;
  out.intervals.resize(family.size());
  for (std::size_t r = 0; r < occ.size(); ++r) {
    auto& target = out.intervals[occ[r].index];
    (occ[r].type == 0 ? target.lo : target.hi) = Rational(static_cast<std::int64_t>(r + 1));
  }
  return out;
}

inline bool endpoints_distinct(const IntervalFamily& family) {
  std::vector<Rational> all;
  for (const auto& iv : family.intervals) {
    all.push_back(iv.lo);
    all.push_back(iv.hi);
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

// ---------------------------------------------------------------------------
// Graphs and posets
// ---------------------------------------------------------------------------

// Undirected loopless graph on 0..n-1 with a dense adjacency matrix.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}

  static SimpleGraph from_edges(int n, std::span<const VertexPair> edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw VertexOutOfRange("graph edge endpoint out of range");
    if (u == v) throw InvalidInstance("self-loop in simple graph");
    adj_[static_cast<std::size_t>(u) * n_ + v] = adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  }

  std::vector<VertexPair> edges() const {
    std::vector<VertexPair> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  int n_ = 0;
  std::vector<char> adj_;
};

// Intersection graph of a system: one vertex per edge.
inline SimpleGraph line_graph(const IntersectionSystem& sys) {
  SimpleGraph g(static_cast<int>(sys.size()));
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = i + 1; j < sys.size(); ++j)
      if (sys.meets(i, j)) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

// Strict partial order; greater(i, j) means i ≻ j.
class Poset {
 public:
  static Poset make(int n, std::span<const VertexPair> greater_pairs) {
    if (n < 0) throw NotAPartialOrder("negative poset size");
    Poset p(n);
    for (auto [i, j] : greater_pairs) {
      if (i < 0 || j < 0 || i >= n || j >= n) throw VertexOutOfRange("poset pair out of range");
      p.at(i, j) = 1;
    }
    p.validate();
    return p;
  }

  int size() const { return n_; }
  bool greater(int i, int j) const { return rel_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  bool comparable(int i, int j) const { return greater(i, j) || greater(j, i); }

  std::vector<VertexPair> pairs() const {
    std::vector<VertexPair> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (greater(i, j)) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  explicit Poset(int n) : n_(n), rel_(static_cast<std::size_t>(n) * n, 0) {}
  char& at(int i, int j) { return rel_[static_cast<std::size_t>(i) * n_ + j]; }

  void validate() const {
    for (int i = 0; i < n_; ++i)
      if (greater(i, i)) throw NotAPartialOrder("relation is not irreflexive at " + std::to_string(i));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (greater(i, j))
          for (int k = 0; k < n_; ++k)
            if (greater(j, k) && !greater(i, k)) throw NotAPartialOrder("relation is not transitive");
  }

  int n_ = 0;
  std::vector<char> rel_;
};

// ---------------------------------------------------------------------------
// Point-tree hypergraphs
// ---------------------------------------------------------------------------

struct PointTreeEdge {
  int x;
  Subtree t;
  friend bool operator==(const PointTreeEdge&, const PointTreeEdge&) = default;
};

// Edges {x} ∪ V(t) with x drawn from the point set 0..x_count-1 and t a
// subtree of `tree`. Points and tree vertices are distinct objects.
struct PointTreeHypergraph {
  int x_count = 0;
  Tree tree;
  std::vector<PointTreeEdge> edges;

  static PointTreeHypergraph make(int x_count, Tree tree, std::vector<PointTreeEdge> edges) {
    PointTreeHypergraph h{x_count, std::move(tree), std::move(edges)};
    if (x_count < 0) throw InvalidInstance("negative x_count");
    for (const auto& e : h.edges) {
      if (e.x < 0 || e.x >= x_count) throw InvalidInstance("edge point out of range");
      for (int v : e.t.vertices())
        if (v >= h.tree.size()) throw VertexOutOfRange("subtree vertex outside host tree");
      if (!is_subtree(h.tree, e.t.vertices())) throw NotASubtree("edge tree is not a subtree of the host");
    }
    return h;
  }
};

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct WidthCertificate {
  std::size_t value = 0;
  std::optional<IndexSet> cover_witness;
  std::optional<IndexSet> matching_witness;
};

}  // namespace mwidth
