#pragma once

#include "mwidth/core.hpp"

// Certificate checks written directly from the definitions. They share no code
// with the solvers, so a solver bug cannot hide behind its own validator.
namespace mwidth::validate {

inline bool is_matching(const IntersectionSystem& sys, const IndexSet& edges) {
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (sys.meets(edges[a], edges[b])) return false;
  return true;
}

inline bool covers(const IntersectionSystem& sys, const IndexSet& cover, const IndexSet& targets) {
  for (int t : targets) {
    bool hit = false;
    for (int c : cover) hit = hit || sys.meets(t, c);
    if (!hit) return false;
  }
  return true;
}

inline bool pairwise_related(const IntersectionSystem& sys, const IndexSet& set, const Relation& rel) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (!rel.related(sys, set[a], set[b])) return false;
  return true;
}

inline bool subset_of(const IndexSet& set, const IndexSet& universe) {
  for (int i : set)
    if (std::find(universe.begin(), universe.end(), i) == universe.end()) return false;
  return true;
}

// Cover witness lies in the pool, is pairwise related and meets every target.
inline bool cover_certificate(const IntersectionSystem& sys, const IndexSet& cover, const IndexSet& targets,
                              const IndexSet& pool, const Relation& rel) {
  return subset_of(cover, pool) && pairwise_related(sys, cover, rel) && covers(sys, cover, targets);
}

// Pairwise line-graph distance > 2 within `family`: no two members meet and
// no member of the family meets two of them.
inline bool two_remote(const IntersectionSystem& sys, const IndexSet& set, const IndexSet& family) {
  if (!is_matching(sys, set)) return false;
  for (int f : family) {
    int hits = 0;
    for (int r : set) hits += sys.meets(f, r) ? 1 : 0;
    if (hits > 1) return false;
  }
  return true;
}

}  // namespace mwidth::validate
