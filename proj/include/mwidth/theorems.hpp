#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "mwidth/generators.hpp"
#include "mwidth/graph_powers.hpp"
#include "mwidth/intervals.hpp"
#include "mwidth/json_io.hpp"
#include "mwidth/oracle.hpp"
#include "mwidth/point_tree.hpp"
#include "mwidth/tree_reduction.hpp"
#include "mwidth/validate.hpp"

// Randomised checks of the duality results, one per theorem id. Each check
// takes an instance and reports the first violated property (empty string when
// everything holds); run_trial draws the instance from a seed first.
namespace mwidth::theorems {

using io::json;

enum class Theorem {
  tree_equality,
  interval_equality,
  imw_iw,
  sigma_nu,
  rho_gamma,
  star_order,
  deficiency_choice,
  zeta_chain,
};

inline constexpr std::array<std::pair<Theorem, std::string_view>, 8> kNames{{
    {Theorem::tree_equality, "tree-equality"},
    {Theorem::interval_equality, "interval-equality"},
    {Theorem::imw_iw, "imw-iw"},
    {Theorem::sigma_nu, "sigma-nu"},
    {Theorem::rho_gamma, "rho-gamma"},
    {Theorem::star_order, "star-order"},
    {Theorem::deficiency_choice, "deficiency-choice"},
    {Theorem::zeta_chain, "zeta-chain"},
}};

inline std::optional<Theorem> parse_theorem(std::string_view name) {
  for (auto [t, n] : kNames)
    if (n == name) return t;
  return std::nullopt;
}

inline std::string_view name_of(Theorem t) {
  for (auto [id, n] : kNames)
    if (id == t) return n;
  return "?";
}

struct Outcome {
  std::string failure;  // empty: all properties hold
  json instance;
  bool ok() const { return failure.empty(); }
};

// Individual checks -------------------------------------------------------

inline std::string check_tree_equality(const SubtreeInstance& inst, const Limits& limits = {}) {
  const auto sys = inst.system();
  const auto pool = all_indices(inst.h2.size());
  const WidthQuery q(sys, inst.h1, pool, inst.relation);
  const auto w = cover_width(q, limits);
  const auto mw = matching_width(q, limits);
  if (mw.value != w.value)
    return "mw " + std::to_string(mw.value) + " != w " + std::to_string(w.value);
  if (!validate::cover_certificate(sys, *w.cover_witness, inst.h1, pool, inst.relation)) return "invalid w witness";
  if (!validate::is_matching(sys, *mw.matching_witness)) return "mw witness is not a matching";

  const auto red = reduce_to_matching(inst, limits);
  if (!validate::is_matching(sys, red.matching)) return "reduction result is not a matching";
  if (!validate::subset_of(red.matching, inst.h1)) return "reduction result leaves h1";
  if (cover_width(q.with_targets(red.matching), limits).value != w.value) return "reduction lost width";

  // One of every intersecting pair can be dropped without lowering the width.
  auto without = [&](int drop) {
    IndexSet out;
    for (int i : inst.h1)
      if (i != drop) out.push_back(i);
    return out;
  };
  for (std::size_t a = 0; a < inst.h1.size(); ++a)
    for (std::size_t b = a + 1; b < inst.h1.size(); ++b) {
      const int c = inst.h1[a], d = inst.h1[b];
      if (!sys.meets(c, d)) continue;
      const auto wc = cover_width(q.with_targets(without(c)), limits).value;
      const auto wd = cover_width(q.with_targets(without(d)), limits).value;
      if (std::max(wc, wd) != w.value) return "pair lemma fails for edges " + std::to_string(c) + "," + std::to_string(d);
    }
  return {};
}

inline std::string check_interval_equality(const IntervalFamily& f, const Limits& limits = {}) {
  if (f.empty()) return {};
  const auto sys = to_intersection_system(f);
  const auto all = all_indices(f.size());
  const WidthQuery q(sys, all, all);
  const auto w = cover_width(q, limits).value;
  const auto mw = matching_width(q, limits).value;
  const auto z2 = zeta_k(sys, 2, limits).value;
  const auto g = greedy_certificates(f);
  if (!(z2 == mw && mw == w && w == g.remote.size() && w == g.cover.size()))
    return "zeta2=" + std::to_string(z2) + " mw=" + std::to_string(mw) + " w=" + std::to_string(w) +
           " |R|=" + std::to_string(g.remote.size()) + " |C|=" + std::to_string(g.cover.size());
  if (!validate::two_remote(sys, g.remote, all)) return "R is not 2-remote";
  if (!validate::covers(sys, g.cover, all)) return "C does not cover";
  return {};
}

inline std::string check_imw_iw(const IntervalFamily& f, const Limits& limits = {}) {
  if (f.empty()) return {};
  const auto sys = to_intersection_system(f);
  const auto all = all_indices(f.size());
  const WidthQuery q(sys, all, all);
  const auto iw = independent_width(q, limits).value;
  const auto imw = independent_matching_width(q, limits).value;
  if (iw != imw) return "imw " + std::to_string(imw) + " != iw " + std::to_string(iw);
  const auto m = iw_witness_matching(f);
  if (!validate::is_matching(sys, m)) return "M is not a matching";
  if (independent_width(q.with_targets(m), limits).value != iw) return "iw(M,F) != iw(F)";
  MatchingEnumerator it(sys, all, iw - 1);
  while (auto z = it.next()) {
    if (z->size() != iw - 1) continue;
    if (validate::covers(sys, *z, m)) return "a matching of size k-1 meets every member of M";
  }
  return {};
}

inline std::string check_sigma_nu(const PointTreeHypergraph& h, const Limits& limits = {}) {
  const auto p = pool(h);
  const auto s = sigma(h, limits);
  const auto [nu_value, nu_witness] = nu(h, limits);
  if (s.value > nu_value) return "sigma " + std::to_string(s.value) + " > nu " + std::to_string(nu_value);
  if (!validate::covers(p.system, *s.cover_witness, p.targets)) return "sigma witness does not cover";
  const auto cert = sigma_certificate(h, limits);
  if (!validate::subset_of(cert.cover, p.pool) || !validate::covers(p.system, cert.cover, p.targets))
    return "sigma certificate does not cover H";
  if (cert.cover.size() > nu_value) return "sigma certificate larger than nu";
  const bool singletons =
      std::all_of(h.edges.begin(), h.edges.end(), [](const PointTreeEdge& e) { return e.t.vertices().size() == 1; });
  if (singletons && s.value != nu_value) return "Koenig case: sigma != nu";
  return {};
}

inline std::string check_rho_gamma(const Poset& p, const Limits& limits = {}) {
  const auto g = incomparability_graph(p);
  for (int k = 1; k <= 3; ++k) {
    const auto rho = rho_k(g, k, limits).value;
    const auto gamma = gamma_k(g, k, limits).value;
    if (rho != gamma)
      return "k=" + std::to_string(k) + ": rho " + std::to_string(rho) + " != gamma " + std::to_string(gamma);
  }
  return {};
}

inline std::string check_star_order(const Poset& p) {
  const auto g = incomparability_graph(p);
  for (int k = 1; k <= 3; ++k) {
    try {
      star_order(p, g, k);
    } catch (const LemmaViolation& e) {
      return "k=" + std::to_string(k) + ": " + e.what();
    }
  }
  return {};
}

inline std::string check_deficiency_choice(const HypergraphFamily& fam, const Limits& limits = {}) {
  const auto def = deficiency(fam, limits);
  if (def.value == 0 && !disjoint_choice(fam, {}, limits)) return "Hall condition holds but no disjoint choice";
  const auto best = min_exclusion_choice(fam, limits);
  if (best.excluded.size() > def.value)
    return "needed " + std::to_string(best.excluded.size()) + " exclusions, deficiency " + std::to_string(def.value);
  return {};
}

inline std::string check_zeta_chain(const IntersectionSystem& sys, bool expect_equal, const Limits& limits = {}) {
  const auto all = all_indices(sys.size());
  const WidthQuery q(sys, all, all);
  const auto w = cover_width(q, limits).value;
  const auto mw = matching_width(q, limits).value;
  const auto z2 = zeta_k(sys, 2, limits).value;
  if (z2 > mw || mw > w) return "chain broken: zeta2=" + std::to_string(z2) + " mw=" + std::to_string(mw) + " w=" + std::to_string(w);
  if (expect_equal && !(z2 == mw && mw == w)) return "interval family with unequal chain";
  return {};
}

// Instances ---------------------------------------------------------------

inline int cap(int natural, int max_size) { return max_size > 0 ? std::min(natural, max_size) : natural; }

inline json generate(Theorem t, std::uint64_t seed, int max_size) {
  gen::Rng r(seed);
  switch (t) {
    case Theorem::tree_equality: {
      gen::SubtreeParams p;
      p.n = r.between(1, cap(9, max_size));
      p.h2_size = r.between(1, cap(8, max_size));
      p.h1_fraction = r.chance(0.5) ? 1.0 : 0.7;
      p.relation_kind = static_cast<Relation::Kind>(r.below(3));
      p.max_subtree_size = r.between(1, p.n);
      return io::subtree_instance_to_json(gen::random_subtree_instance(r.next(), p));
    }
    case Theorem::interval_equality:
    case Theorem::imw_iw:
    case Theorem::zeta_chain: {
      gen::IntervalParams p{r.between(1, cap(11, max_size)), 24, r.between(0, 8)};
      return io::interval_family_to_json(gen::random_intervals(r.next(), p));
    }
    case Theorem::sigma_nu: {
      gen::PointTreeParams p;
      p.x_count = r.between(1, cap(5, max_size));
      p.n = r.between(1, 7);
      p.edge_count = r.between(0, cap(9, max_size));
      p.singleton_mode = r.chance(0.25);
      p.max_subtree_size = r.between(1, p.n);
      return io::point_tree_to_json(gen::random_point_tree(r.next(), p));
    }
    case Theorem::rho_gamma:
    case Theorem::star_order: {
      const int n = r.between(1, cap(9, max_size));
      const double density = static_cast<double>(r.between(0, 10)) / 10.0;
      return io::poset_to_json(gen::random_poset(r.next(), n, density));
    }
    case Theorem::deficiency_choice: {
      gen::FamilyParams p;
      p.count = r.between(1, cap(6, max_size));
      p.max_edges = 4;
      p.ground = r.between(2, 6);
      p.max_edge_size = r.between(1, 3);
      return io::family_to_json(gen::random_hypergraph_family(r.next(), p));
    }
  }
  throw InvalidInstance("unknown theorem");
}

// Limits wide enough for every generated instance above.
inline Limits trial_limits() { return Limits{32, 32, 40, 12}; }

inline std::string check(Theorem t, const json& instance, const Limits& limits = trial_limits()) {
  switch (t) {
    case Theorem::tree_equality: return check_tree_equality(io::subtree_instance_from_json(instance), limits);
    case Theorem::interval_equality: return check_interval_equality(io::interval_family_from_json(instance), limits);
    case Theorem::imw_iw: return check_imw_iw(io::interval_family_from_json(instance), limits);
    case Theorem::sigma_nu: return check_sigma_nu(io::point_tree_from_json(instance), limits);
    case Theorem::rho_gamma: return check_rho_gamma(io::poset_from_json(instance), limits);
    case Theorem::star_order: return check_star_order(io::poset_from_json(instance));
    case Theorem::deficiency_choice: return check_deficiency_choice(io::family_from_json(instance), limits);
    case Theorem::zeta_chain: {
      if (io::detect_kind(instance) == io::InstanceKind::intervals)
        return check_zeta_chain(to_intersection_system(io::interval_family_from_json(instance)), true, limits);
      return check_zeta_chain(io::subtree_instance_from_json(instance).system(), false, limits);
    }
  }
  return "unknown theorem";
}

inline Outcome run_trial(Theorem t, std::uint64_t seed, int max_size = 0) {
  Outcome out;
  out.instance = generate(t, seed, max_size);
  try {
    out.failure = check(t, out.instance);
  } catch (const error& e) {
    out.failure = std::string("error: ") + e.what();
  }
  return out;
}

}  // namespace mwidth::theorems
