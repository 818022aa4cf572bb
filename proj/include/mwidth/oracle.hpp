#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwidth/core.hpp"

namespace mwidth {

// Size guards for the exhaustive solvers. Every solver indexes its working
// sets with 64-bit masks, so no cap may exceed 64.
struct Limits {
  std::size_t pool = 24;
  std::size_t targets = 20;
  std::size_t graph = 40;   // vertices, for the graph-power solvers
  std::size_t family = 12;  // hypergraphs, for deficiency

  static Limits uniform(std::size_t cap) { return {cap, cap, cap, cap}; }
};

namespace detail {

inline void check_cap(std::size_t have, std::size_t cap, const char* what) {
  if (cap > 64) throw SizeCapExceeded(std::string(what) + " cap above 64 is not supported");
  if (have > cap)
    throw SizeCapExceeded(std::string(what) + " size " + std::to_string(have) + " exceeds cap " +
                          std::to_string(cap));
}

inline void check_indices(const IntersectionSystem& sys, const IndexSet& set, const char* what) {
  for (int i : set)
    if (i < 0 || static_cast<std::size_t>(i) >= sys.size())
      throw InvalidInstance(std::string(what) + " index out of range");
}

inline int lowest(std::uint64_t mask) { return std::countr_zero(mask); }

inline IndexSet unpack(std::uint64_t mask, const IndexSet& universe) {
  IndexSet out;
  for (; mask; mask &= mask - 1) out.push_back(universe[lowest(mask)]);
  return out;
}

}  // namespace detail

// A width problem: cover `targets` by a pairwise-related subset of `pool`.
struct WidthQuery {
  const IntersectionSystem* system = nullptr;
  IndexSet targets;
  IndexSet pool;
  Relation relation = Relation::total();

  WidthQuery(const IntersectionSystem& sys, IndexSet t, IndexSet p, Relation rel = Relation::total())
      : system(&sys), targets(std::move(t)), pool(std::move(p)), relation(std::move(rel)) {
    detail::check_indices(sys, targets, "target");
    detail::check_indices(sys, pool, "pool");
  }

  WidthQuery with_targets(IndexSet t) const { return WidthQuery(*system, std::move(t), pool, relation); }
  WidthQuery with_relation(Relation r) const { return WidthQuery(*system, targets, pool, std::move(r)); }
};

namespace detail {

// Bitmask view of a query: targets and pool renumbered locally.
class CoverSearch {
 public:
  CoverSearch(const WidthQuery& q, const Limits& limits) : q_(q) {
    check_cap(q.pool.size(), limits.pool, "pool");
    check_cap(q.targets.size(), limits.targets, "targets");
    const auto& sys = *q.system;
    hit_.assign(q.targets.size(), 0);
    covers_.assign(q.pool.size(), 0);
    compat_.assign(q.pool.size(), 0);
    for (std::size_t t = 0; t < q.targets.size(); ++t)
      for (std::size_t p = 0; p < q.pool.size(); ++p)
        if (sys.meets(q.targets[t], q.pool[p])) {
          hit_[t] |= bit(p);
          covers_[p] |= bit(t);
        }
    for (std::size_t a = 0; a < q.pool.size(); ++a)
      for (std::size_t b = 0; b < q.pool.size(); ++b)
        if (a != b && q.pool[a] != q.pool[b] && q.relation.related(sys, q.pool[a], q.pool[b]))
          compat_[a] |= bit(b);
  }

  // Minimum related cover, or nullopt when none exists.
  std::optional<IndexSet> solve(std::uint64_t target_mask) {
    for (std::uint64_t rest = target_mask; rest; rest &= rest - 1)
      if (hit_[lowest(rest)] == 0) return std::nullopt;
    const std::uint64_t all_pool = q_.pool.size() == 64 ? ~0ULL : (bit(q_.pool.size()) - 1);
    for (std::size_t k = 0; k <= q_.pool.size(); ++k) {
      chosen_.clear();
      if (dfs(target_mask, all_pool, k)) return unpack_chosen();
    }
    return std::nullopt;
  }

  std::uint64_t all_targets() const {
    return q_.targets.size() == 64 ? ~0ULL : (bit(q_.targets.size()) - 1);
  }

 private:
  static std::uint64_t bit(std::size_t i) { return 1ULL << i; }

  // Branch on the lowest uncovered target: some chosen element must meet it.
  bool dfs(std::uint64_t uncovered, std::uint64_t allowed, std::size_t budget) {
    if (uncovered == 0) return true;
    if (budget == 0) return false;
    for (std::uint64_t rest = uncovered; rest; rest &= rest - 1)
      if ((hit_[lowest(rest)] & allowed) == 0) return false;
    for (std::uint64_t cands = hit_[lowest(uncovered)] & allowed; cands; cands &= cands - 1) {
      const int c = lowest(cands);
      chosen_.push_back(c);
      if (dfs(uncovered & ~covers_[c], allowed & compat_[c], budget - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  IndexSet unpack_chosen() const {
    IndexSet out;
    for (int c : chosen_) out.push_back(q_.pool[c]);
    std::sort(out.begin(), out.end());
    return out;
  }

  const WidthQuery& q_;
  std::vector<std::uint64_t> hit_, covers_, compat_;
  std::vector<int> chosen_;
};

// Calls `visit(mask)` for every maximal matching among `targets` (local
// bitmask over target positions), in lexicographic include-first order.
template <class Visit>
void for_each_maximal_matching(const IntersectionSystem& sys, const IndexSet& targets, Visit&& visit) {
  const std::size_t t = targets.size();
  std::vector<std::uint64_t> conflict(t, 0);
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = 0; b < t; ++b)
      if (sys.meets(targets[a], targets[b])) conflict[a] |= 1ULL << b;
  // A target is skippable only if something chosen (now or later) meets it;
  // checked at the leaf.
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t chosen, std::uint64_t blocked) -> void {
    if (pos == t) {
      for (std::size_t i = 0; i < t; ++i)
        if (!(chosen >> i & 1) && (conflict[i] & chosen) == 0) return;
      visit(chosen);
      return;
    }
    if (!(blocked >> pos & 1)) self(self, pos + 1, chosen | 1ULL << pos, blocked | conflict[pos]);
    self(self, pos + 1, chosen, blocked);
  };
  rec(rec, 0, 0, 0);
}

}  // namespace detail

// w(H1, H2, ~): minimum size of a pairwise-related subset of the pool meeting
// every target.
inline WidthCertificate cover_width(const WidthQuery& query, const Limits& limits = {}) {
  detail::CoverSearch search(query, limits);
  auto cover = search.solve(search.all_targets());
  if (!cover) throw Uncoverable("no related subset of the pool covers the targets");
  WidthCertificate cert;
  cert.value = cover->size();
  cert.cover_witness = std::move(*cover);
  return cert;
}

// iw: cover_width with the covering set required to be a matching.
inline WidthCertificate independent_width(const WidthQuery& query, const Limits& limits = {}) {
  return cover_width(query.with_relation(Relation::disjointness()), limits);
}

// mw(H1, H2, ~): maximum over matchings M among the targets of w(M, H2, ~).
// A cover of a matching covers all of its sub-matchings, so only maximal
// matchings need to be examined.
inline WidthCertificate matching_width(const WidthQuery& query, const Limits& limits = {}) {
  detail::CoverSearch search(query, limits);
  WidthCertificate best;
  best.matching_witness = IndexSet{};
  best.cover_witness = IndexSet{};
  bool first = true;
  detail::for_each_maximal_matching(*query.system, query.targets, [&](std::uint64_t mask) {
    auto cover = search.solve(mask);
    if (!cover) throw Uncoverable("a matching among the targets has no related cover");
    if (first || cover->size() > best.value) {
      first = false;
      best.value = cover->size();
      best.matching_witness = detail::unpack(mask, query.targets);
      best.cover_witness = std::move(*cover);
    }
  });
  return best;
}

// imw: matching_width with independent covers.
inline WidthCertificate independent_matching_width(const WidthQuery& query, const Limits& limits = {}) {
  return matching_width(query.with_relation(Relation::disjointness()), limits);
}

// ν: maximum number of pairwise non-meeting targets.
inline std::pair<std::size_t, IndexSet> matching_number(const IntersectionSystem& sys, const IndexSet& targets,
                                                        const Limits& limits = {}) {
  detail::check_indices(sys, targets, "target");
  detail::check_cap(targets.size(), std::max<std::size_t>(limits.targets, limits.pool), "targets");
  const std::size_t t = targets.size();
  std::vector<std::uint64_t> conflict(t, 0);
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = 0; b < t; ++b)
      if (sys.meets(targets[a], targets[b])) conflict[a] |= 1ULL << b;
  std::uint64_t best = 0;
  auto rec = [&](auto&& self, std::uint64_t chosen, std::uint64_t open) -> void {
    if (std::popcount(chosen) + std::popcount(open) <= std::popcount(best)) return;
    if (open == 0) {
      best = chosen;
      return;
    }
    const int v = detail::lowest(open);
    self(self, chosen | 1ULL << v, open & ~conflict[v]);
    self(self, chosen, open & ~(1ULL << v));
  };
  const std::uint64_t all = t == 64 ? ~0ULL : ((1ULL << t) - 1);
  rec(rec, 0, all);
  if (t == 0) return {0, {}};
  return {static_cast<std::size_t>(std::popcount(best)), detail::unpack(best, targets)};
}

// Cursor over every matching among `targets` with at most `size_cap` edges,
// ordered by size and then lexicographically by target position. Matchings are
// reported as system indices.
class MatchingEnumerator {
 public:
  MatchingEnumerator(const IntersectionSystem& sys, IndexSet targets, std::size_t size_cap)
      : sys_(&sys), targets_(std::move(targets)), cap_(size_cap) {
    detail::check_indices(sys, targets_, "target");
  }

  std::optional<IndexSet> next() {
    while (pos_ >= level_.size()) {
      if (size_ > cap_ || size_ > targets_.size()) return std::nullopt;
      fill_level(size_++);
      pos_ = 0;
    }
    return level_[pos_++];
  }

 private:
  void fill_level(std::size_t k) {
    level_.clear();
    IndexSet cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (cur.size() == k) {
        level_.push_back(cur);
        return;
      }
      for (std::size_t i = from; i + (k - cur.size()) <= targets_.size(); ++i) {
        bool ok = true;
        for (int c : cur) ok = ok && !sys_->meets(c, targets_[i]);
        if (!ok) continue;
        cur.push_back(targets_[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }

  const IntersectionSystem* sys_;
  IndexSet targets_;
  std::size_t cap_;
  std::size_t size_ = 0;
  std::vector<IndexSet> level_;
  std::size_t pos_ = 0;
};

inline std::vector<IndexSet> enumerate_matchings(const IntersectionSystem& sys, const IndexSet& targets,
                                                 std::size_t size_cap) {
  MatchingEnumerator it(sys, targets, size_cap);
  std::vector<IndexSet> out;
  while (auto m = it.next()) out.push_back(std::move(*m));
  return out;
}

}  // namespace mwidth
