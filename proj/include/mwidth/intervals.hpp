#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "mwidth/core.hpp"
#include "mwidth/graph_powers.hpp"

namespace mwidth {

// Index of the interval with the smallest right endpoint among `among`
// (smallest index on ties).
inline int leftmost(const IntervalFamily& family, const IndexSet& among) {
  if (among.empty()) throw EmptyFamily("leftmost of an empty family");
  int best = among.front();
  for (int i : among)
    if (family[i].hi < family[best].hi || (family[i].hi == family[best].hi && i < best)) best = i;
  return best;
}

inline int leftmost(const IntervalFamily& family) { return leftmost(family, all_indices(family.size())); }

// F(>x): intervals lying entirely inside (x, ∞). nullopt stands for x = -∞.
inline IndexSet restrict_right(const IntervalFamily& family, const std::optional<Rational>& x) {
  IndexSet out;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!x || family[i].lo > *x) out.push_back(static_cast<int>(i));
  return out;
}

struct GreedyCertificates {
  IndexSet remote;  // R: 2-remote
  IndexSet cover;   // C: covers the family, |C| == |R|
};

// Builds R and C in lockstep: r = ℓ(F(>y)) for the last right end y, c = the
// interval meeting r that reaches furthest right; stop once nothing lies to the
// right of c.
inline GreedyCertificates greedy_certificates(const IntervalFamily& family) {
  if (family.empty()) throw EmptyFamily("greedy certificates need a nonempty family");
  GreedyCertificates out;
  std::optional<Rational> y;
  for (IndexSet rest = all_indices(family.size()); !rest.empty(); rest = restrict_right(family, y)) {
    const int r = leftmost(family, rest);
    int c = r;
    for (std::size_t i = 0; i < family.size(); ++i)
      if (family[i].meets(family[r]) && family[i].hi > family[c].hi) c = static_cast<int>(i);
    out.remote.push_back(r);
    out.cover.push_back(c);
    y = family[c].hi;
  }
  return out;
}

// ζ_k: largest k-remote edge set, i.e. γ_k of the line graph.
inline IndependentSet zeta_k(const IntersectionSystem& sys, int k, const Limits& limits = {}) {
  if (k < 1) throw InvalidInstance("zeta_k needs k >= 1");
  return gamma_k(line_graph(sys), k, limits);
}

inline IndependentSet zeta_k(const IntervalFamily& family, int k, const Limits& limits = {}) {
  return zeta_k(to_intersection_system(family), k, limits);
}

// Splits the family into |C| groups, group i holding the intervals that first
// stop lying to the right of c_{i-1}; every member of group i meets c_i.
inline std::vector<IndexSet> radius1_partition(const IntervalFamily& family) {
  const auto cert = greedy_certificates(family);
  std::vector<IndexSet> groups(cert.cover.size());
  for (std::size_t f = 0; f < family.size(); ++f) {
    std::size_t g = 0;
    while (family[f].lo > family[cert.cover[g]].hi) ++g;
    groups[g].push_back(static_cast<int>(f));
  }
  return groups;
}

// D_j: intervals occurring j-th in some dense matching; L_j: their right ends.
struct DensePositionTable {
  std::vector<IndexSet> d;
  std::vector<std::vector<Rational>> l;
};

// Dense matchings are left-to-right matchings (e_1, ..., e_t) with no family
// interval lying entirely in any gap (-∞, lo(e_1)), (hi(e_{j-1}), lo(e_j)).
inline DensePositionTable dense_positions(const IntervalFamily& family) {
  if (!endpoints_distinct(family)) throw EndpointsNotDistinct("dense positions need distinct endpoints");
  auto gap_empty = [&](const std::optional<Rational>& from, const Rational& to) {
    for (const auto& g : family.intervals)
      if ((!from || g.lo > *from) && g.hi < to) return false;
    return true;
  };
  DensePositionTable table;
  IndexSet layer;
  for (std::size_t e = 0; e < family.size(); ++e)
    if (gap_empty(std::nullopt, family[e].lo)) layer.push_back(static_cast<int>(e));
  while (!layer.empty()) {
    std::vector<Rational> ends;
    for (int e : layer) ends.push_back(family[e].hi);
    std::sort(ends.begin(), ends.end());
    table.d.push_back(layer);
    table.l.push_back(ends);
    IndexSet next;
    for (std::size_t f = 0; f < family.size(); ++f)
      for (int e : layer)
        if (family[e].hi < family[f].lo && gap_empty(family[e].hi, family[f].lo)) {
          next.push_back(static_cast<int>(f));
          break;
        }
    layer = std::move(next);
  }
  return table;
}

namespace detail {

// [a, b] ∩ L ⊆ {b}
inline bool l_free(const Interval& iv, const std::vector<Rational>& ends) {
  return std::none_of(ends.begin(), ends.end(), [&](const Rational& p) { return iv.lo <= p && p < iv.hi; });
}

}  // namespace detail

// A matching M with iw(M, F) == iw(F): the intervals d_i(E) = ℓ(F(>b_{i-1}))
// over dense matchings E that are L_j-free for every earlier position j < i.
// (Also demanding L_i-freeness at the candidate's own position loses members
// and breaks iw(M, F) == iw(F) on some families.) Candidates at position i
// depend only on b_{i-1} ∈ L_{i-1}, so the table suffices.
// Indices refer to the input family.
inline IndexSet iw_witness_matching(const IntervalFamily& original) {
  if (original.empty()) throw EmptyFamily("iw witness needs a nonempty family");
  const auto family = make_endpoints_distinct(original);
  const auto table = dense_positions(family);
  std::set<int> members;
  auto consider = [&](int candidate, std::size_t position) {
    for (std::size_t j = 0; j + 1 < position && j < table.l.size(); ++j)
      if (!detail::l_free(family[candidate], table.l[j])) return;
    members.insert(candidate);
  };
  consider(leftmost(family), 1);
  for (std::size_t i = 2; i <= table.l.size() + 1; ++i)
    for (const auto& b : table.l[i - 2]) {
      const auto right = restrict_right(family, b);
      if (!right.empty()) consider(leftmost(family, right), i);
    }
  return IndexSet(members.begin(), members.end());
}

}  // namespace mwidth
