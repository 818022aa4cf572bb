#pragma once

#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "brute.hpp"
#include "mwidth/mwidth.hpp"

namespace support {

inline mwidth::IntervalFamily intervals(std::initializer_list<std::pair<long, long>> list) {
  mwidth::IntervalFamily f;
  for (auto [lo, hi] : list) f.intervals.push_back(mwidth::Interval::make(lo, hi));
  return f;
}

// Integer-endpoint families only.
inline std::vector<brute::IntIv> to_brute(const mwidth::IntervalFamily& f) {
  std::vector<brute::IntIv> out;
  for (const auto& iv : f.intervals) out.push_back({static_cast<long>(iv.lo.num()), static_cast<long>(iv.hi.num())});
  return out;
}

inline brute::Matrix matrix_of(const mwidth::IntersectionSystem& sys) {
  brute::Matrix out(sys.size(), std::vector<char>(sys.size(), 0));
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j) out[i][j] = sys.meets(i, j);
  return out;
}

inline brute::Matrix matrix_of(const mwidth::SimpleGraph& g) {
  brute::Matrix out(g.size(), std::vector<char>(g.size(), 0));
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) out[i][j] = g.adjacent(i, j);
  return out;
}

inline std::vector<std::set<int>> sets_of(const mwidth::SubtreeInstance& inst) {
  std::vector<std::set<int>> out;
  for (const auto& s : inst.h2) out.emplace_back(s.vertices().begin(), s.vertices().end());
  return out;
}

inline mwidth::Tree path(int n) {
  std::vector<mwidth::VertexPair> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return mwidth::validate_tree(n, e);
}

inline mwidth::Tree star(int leaves) {
  std::vector<mwidth::VertexPair> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return mwidth::validate_tree(leaves + 1, e);
}

inline mwidth::SubtreeInstance subtrees(const mwidth::Tree& t, std::vector<std::vector<int>> sets,
                                        mwidth::IndexSet h1 = {}, mwidth::Relation rel = mwidth::Relation::total()) {
  std::vector<mwidth::Subtree> h2;
  for (auto& s : sets) h2.push_back(mwidth::Subtree::make(t, s));
  if (h1.empty()) h1 = mwidth::all_indices(h2.size());
  return mwidth::SubtreeInstance::make(t, std::move(h2), std::move(h1), std::move(rel));
}

}  // namespace support
