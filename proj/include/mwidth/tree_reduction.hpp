#pragma once

#include <utility>
#include <vector>

#include "mwidth/core.hpp"
#include "mwidth/oracle.hpp"

namespace mwidth {

struct ReductionStep {
  int c;        // first edge of the intersecting pair (h2 index)
  int d;        // second edge
  int removed;  // c or d
  std::size_t width;
};

struct ReductionResult {
  IndexSet matching;  // h2 indices, a matching inside h1
  std::vector<ReductionStep> trace;
  std::size_t width = 0;
};

// Deletes edges from h1 one at a time until a matching remains, keeping
// w(·, h2, ~) fixed. For subtrees of a tree one edge of every intersecting pair
// can always be dropped without lowering the width; if neither can, the
// instance contradicts that guarantee and LemmaViolation is raised.
inline ReductionResult reduce_to_matching(const SubtreeInstance& instance, const Limits& limits = {}) {
  const auto sys = instance.system();
  const IndexSet pool = all_indices(instance.h2.size());
  auto width_of = [&](const IndexSet& targets) {
    return cover_width(WidthQuery(sys, targets, pool, instance.relation), limits).value;
  };

  ReductionResult result;
  IndexSet current = instance.h1;
  std::sort(current.begin(), current.end());
  result.width = width_of(current);

  auto without = [](const IndexSet& set, int drop) {
    IndexSet out;
    for (int i : set)
      if (i != drop) out.push_back(i);
    return out;
  };

  for (;;) {
    std::optional<std::pair<int, int>> pair;
    for (std::size_t a = 0; a < current.size() && !pair; ++a)
      for (std::size_t b = a + 1; b < current.size() && !pair; ++b)
        if (sys.meets(current[a], current[b])) pair = std::make_pair(current[a], current[b]);
    if (!pair) break;

    const auto [c, d] = *pair;
    int removed = c;
    IndexSet next = without(current, c);
    if (width_of(next) != result.width) {
      removed = d;
      next = without(current, d);
      if (width_of(next) != result.width)
        throw LemmaViolation("removing either edge of an intersecting pair lowered the width");
    }
    result.trace.push_back({c, d, removed, result.width});
    current = std::move(next);
  }
  result.matching = std::move(current);
  return result;
}

}  // namespace mwidth
