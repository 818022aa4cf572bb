// mwidth: widths, matching widths and their certificates on JSON instances.
//
// Exit codes: 0 ok, 1 malformed input or usage, 2 size cap exceeded,
// 3 uncoverable, 4 property violated (check).

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "mwidth/mwidth.hpp"

namespace {

using mwidth::io::json;
using namespace mwidth;

enum Exit { kOk = 0, kMalformed = 1, kCap = 2, kUncoverable = 3, kViolated = 4 };

struct Options {
  std::string input = "-";
  std::string out;
  bool deterministic = false;
  bool json_output = true;
  std::size_t cap = 0;
  int k = 2;

  // gen
  std::string gen_kind;
  std::uint64_t seed = 1;
  int n = 6;
  int count = 6;
  int coord_range = 24;
  int max_len = 6;
  int h2 = 5;
  double h1_fraction = 1.0;
  std::string relation = "total";
  int x_count = 3;
  int edges = 5;
  bool singleton = false;
  double density = 0.5;

  // check
  std::string theorem;
  int trials = 100;
  int max_size = 0;
  std::string replay;

  Limits limits() const { return cap ? Limits::uniform(cap) : Limits{}; }
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

void emit(const Options& opt, const json& report) { write_text(opt.out, report.dump(2) + "\n"); }

class Stopwatch {
 public:
  void stamp(const Options& opt, json& report) const {
    if (opt.deterministic) return;
    const auto d = std::chrono::steady_clock::now() - start_;
    report["elapsed_ms"] = std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json labels_of(const IntersectionSystem& sys, const IndexSet& set) {
  json out = json::array();
  for (int i : set) out.push_back(sys.label(i));
  return out;
}

// widths --------------------------------------------------------------------

int cmd_widths(const Options& opt) {
  Stopwatch clock;
  const auto doc = io::parse(read_input(opt.input));
  IntersectionSystem sys;
  IndexSet targets, pool_set;
  Relation rel = Relation::total();
  std::string kind;
  switch (io::detect_kind(doc)) {
    case io::InstanceKind::intervals:
      sys = to_intersection_system(io::interval_family_from_json(doc));
      targets = pool_set = all_indices(sys.size());
      kind = "intervals";
      break;
    case io::InstanceKind::subtree: {
      const auto inst = io::subtree_instance_from_json(doc);
      sys = inst.system();
      targets = inst.h1;
      pool_set = all_indices(inst.h2.size());
      rel = inst.relation;
      kind = "subtrees";
      break;
    }
    case io::InstanceKind::point_tree: {
      auto p = pool(io::point_tree_from_json(doc));
      sys = std::move(p.system);
      targets = std::move(p.targets);
      pool_set = std::move(p.pool);
      kind = "point-tree";
      break;
    }
    default: throw ParseError("widths expects an interval, subtree or point-tree instance");
  }

  const WidthQuery q(sys, targets, pool_set, rel);
  const WidthQuery qi = q.with_relation(Relation::disjointness());
  const auto limits = opt.limits();
  json report{{"instance", kind}};
  json witnesses = json::object();
  json uncoverable = json::array();
  bool valid = true;

  auto run = [&](const char* name, const WidthQuery& query,
                 const std::function<WidthCertificate(const WidthQuery&, const Limits&)>& solve) {
    try {
      const auto cert = solve(query, limits);
      report[name] = cert.value;
      json w{{"cover", labels_of(sys, *cert.cover_witness)}};
      const IndexSet& covered = cert.matching_witness ? *cert.matching_witness : query.targets;
      valid = valid && validate::cover_certificate(sys, *cert.cover_witness, covered, query.pool, query.relation);
      if (cert.matching_witness) {
        w["matching"] = labels_of(sys, *cert.matching_witness);
        valid = valid && validate::is_matching(sys, *cert.matching_witness) &&
                validate::subset_of(*cert.matching_witness, query.targets);
      }
      witnesses[name] = w;
    } catch (const Uncoverable&) {
      report[name] = nullptr;
      uncoverable.push_back(name);
    }
  };
  run("w", q, cover_width);
  run("mw", q, matching_width);
  run("iw", qi, cover_width);
  run("imw", qi, matching_width);

  report["witnesses"] = witnesses;
  report["uncoverable"] = uncoverable;
  report["witness_valid"] = valid;
  clock.stamp(opt, report);
  emit(opt, report);
  if (!valid) return kViolated;
  return uncoverable.empty() ? kOk : kUncoverable;
}

// tree-reduce -----------------------------------------------------------------

int cmd_tree_reduce(const Options& opt) {
  Stopwatch clock;
  const auto inst = io::subtree_instance_from_json(io::parse(read_input(opt.input)));
  const auto limits = opt.limits();
  const auto result = reduce_to_matching(inst, limits);
  const auto sys = inst.system();
  const WidthQuery q(sys, result.matching, all_indices(inst.h2.size()), inst.relation);
  const bool valid = validate::is_matching(sys, result.matching) && validate::subset_of(result.matching, inst.h1) &&
                     cover_width(q, limits).value == result.width;
  json trace = json::array();
  for (const auto& s : result.trace) trace.push_back(json{{"c", s.c}, {"d", s.d}, {"removed", s.removed}});
  json report{{"width", result.width},
              {"matching", result.matching},
              {"matching_labels", labels_of(sys, result.matching)},
              {"trace", trace},
              {"witness_valid", valid}};
  clock.stamp(opt, report);
  emit(opt, report);
  return valid ? kOk : kViolated;
}

// interval-cert / interval-iw ---------------------------------------------------

int cmd_interval_cert(const Options& opt) {
  Stopwatch clock;
  const auto family = io::interval_family_from_json(io::parse(read_input(opt.input)));
  const auto cert = greedy_certificates(family);
  const auto groups = radius1_partition(family);
  const auto sys = to_intersection_system(family);
  const auto all = all_indices(family.size());
  bool valid = cert.remote.size() == cert.cover.size() && validate::two_remote(sys, cert.remote, all) &&
               validate::covers(sys, cert.cover, all) && groups.size() == cert.cover.size();
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (int f : groups[g]) valid = valid && sys.meets(f, cert.cover[g]);
  json report{{"width", cert.cover.size()}, {"R", cert.remote}, {"C", cert.cover}, {"partition", groups},
              {"witness_valid", valid}};
  clock.stamp(opt, report);
  emit(opt, report);
  return valid ? kOk : kViolated;
}

int cmd_interval_iw(const Options& opt) {
  Stopwatch clock;
  const auto family = io::interval_family_from_json(io::parse(read_input(opt.input)));
  const auto limits = opt.limits();
  const auto m = iw_witness_matching(family);
  const auto sys = to_intersection_system(family);
  const auto all = all_indices(family.size());
  const WidthQuery q(sys, all, all, Relation::disjointness());
  const auto iw = cover_width(q, limits).value;
  const auto iw_m = cover_width(q.with_targets(m), limits).value;
  bool property_p = true;
  MatchingEnumerator it(sys, all, iw - 1);
  while (auto z = it.next())
    if (z->size() == iw - 1 && validate::covers(sys, *z, m)) property_p = false;
  const bool valid = validate::is_matching(sys, m) && iw_m == iw && property_p;
  const auto table = dense_positions(make_endpoints_distinct(family));
  json report{{"iw", iw},
              {"M", m},
              {"iw_M", iw_m},
              {"property_p", property_p},
              {"dense_positions", table.d},
              {"witness_valid", valid}};
  clock.stamp(opt, report);
  emit(opt, report);
  return valid ? kOk : kViolated;
}

// ptree -----------------------------------------------------------------------

int cmd_ptree(const Options& opt) {
  Stopwatch clock;
  const auto h = io::point_tree_from_json(io::parse(read_input(opt.input)));
  const auto limits = opt.limits();
  const auto p = pool(h);
  const auto s = sigma(h, limits);
  const auto [nu_value, nu_witness] = nu(h, limits);
  const auto cert = sigma_certificate(h, limits);
  const bool valid = validate::covers(p.system, *s.cover_witness, p.targets) &&
                     validate::covers(p.system, cert.cover, p.targets) && validate::subset_of(cert.cover, p.pool) &&
                     validate::is_matching(p.system, nu_witness) && cert.cover.size() <= nu_value;
  json report{{"sigma", s.value},
              {"nu", nu_value},
              {"certificate_size", cert.cover.size()},
              {"certificate", labels_of(p.system, cert.cover)},
              {"Y", cert.y},
              {"sigma_witness", labels_of(p.system, *s.cover_witness)},
              {"nu_witness", labels_of(p.system, nu_witness)},
              {"witness_valid", valid}};
  clock.stamp(opt, report);
  emit(opt, report);
  return valid ? kOk : kViolated;
}

// power -----------------------------------------------------------------------

int cmd_power(const Options& opt) {
  Stopwatch clock;
  const auto doc = io::parse(read_input(opt.input));
  const auto limits = opt.limits();
  SimpleGraph g;
  std::optional<Poset> order;
  switch (io::detect_kind(doc)) {
    case io::InstanceKind::graph: g = io::graph_from_json(doc); break;
    case io::InstanceKind::poset:
      order = io::poset_from_json(doc);
      g = incomparability_graph(*order);
      break;
    case io::InstanceKind::intervals: {
      const auto family = io::interval_family_from_json(doc);
      g = line_graph(to_intersection_system(family));
      order = interval_order(family);
      break;
    }
    default: throw ParseError("power expects a graph, poset or interval instance");
  }
  const auto power = graph_power(g, opt.k);
  const auto gamma = gamma_k(g, opt.k, limits);
  const auto rho = rho_k(g, opt.k, limits);

  const auto dist = distances(g);
  bool valid = true;
  for (std::size_t a = 0; a < gamma.witness.size(); ++a)
    for (std::size_t b = a + 1; b < gamma.witness.size(); ++b)
      valid = valid && dist[gamma.witness[a]][gamma.witness[b]] > opt.k;
  std::vector<int> seen(static_cast<std::size_t>(g.size()), 0);
  for (const auto& grp : rho.groups)
    for (std::size_t a = 0; a < grp.size(); ++a) {
      ++seen[grp[a]];
      for (std::size_t b = a + 1; b < grp.size(); ++b) valid = valid && dist[grp[a]][grp[b]] <= opt.k;
    }
  for (int c : seen) valid = valid && c == 1;

  json report{{"n", g.size()},
              {"k", opt.k},
              {"gamma", gamma.value},
              {"gamma_witness", gamma.witness},
              {"rho", rho.value},
              {"rho_witness", rho.groups},
              {"power_edges", io::graph_to_json(power)["edges"]}};
  if (order) {
    const auto star = star_order(*order, g, opt.k);
    report["star_order"] = io::poset_to_json(star)["less"];
  }
  report["witness_valid"] = valid;
  clock.stamp(opt, report);
  emit(opt, report);
  return valid ? kOk : kViolated;
}

// gen -------------------------------------------------------------------------

Relation::Kind relation_kind(const std::string& name) {
  if (name == "total") return Relation::Kind::total;
  if (name == "disjointness") return Relation::Kind::disjointness;
  if (name == "custom") return Relation::Kind::custom;
  throw ParseError("unknown relation kind '" + name + "'");
}

int cmd_gen(const Options& opt) {
  json doc;
  if (opt.gen_kind == "tree") {
    doc = io::tree_to_json(gen::random_tree(opt.seed, opt.n));
  } else if (opt.gen_kind == "subtree") {
    gen::SubtreeParams p;
    p.n = opt.n;
    p.h2_size = opt.h2;
    p.h1_fraction = opt.h1_fraction;
    p.relation_kind = relation_kind(opt.relation);
    doc = io::subtree_instance_to_json(gen::random_subtree_instance(opt.seed, p));
  } else if (opt.gen_kind == "intervals") {
    doc = io::interval_family_to_json(gen::random_intervals(opt.seed, {opt.count, opt.coord_range, opt.max_len}));
  } else if (opt.gen_kind == "ptree") {
    gen::PointTreeParams p;
    p.x_count = opt.x_count;
    p.n = opt.n;
    p.edge_count = opt.edges;
    p.singleton_mode = opt.singleton;
    doc = io::point_tree_to_json(gen::random_point_tree(opt.seed, p));
  } else if (opt.gen_kind == "poset") {
    doc = io::poset_to_json(gen::random_poset(opt.seed, opt.n, opt.density));
  } else if (opt.gen_kind == "family") {
    gen::FamilyParams p;
    p.count = opt.count;
    doc = io::family_to_json(gen::random_hypergraph_family(opt.seed, p));
  } else {
    throw ParseError("unknown instance kind '" + opt.gen_kind + "'");
  }
  emit(opt, doc);
  return kOk;
}

// check -----------------------------------------------------------------------

int cmd_check(const Options& opt) {
  const auto theorem = theorems::parse_theorem(opt.theorem);
  if (!theorem) throw ParseError("unknown theorem id '" + opt.theorem + "'");
  const std::string counterexample = opt.out.empty() ? "counterexample.json" : opt.out;

  if (!opt.replay.empty()) {
    const auto doc = io::parse(read_input(opt.replay));
    const auto instance = doc.contains("instance") ? doc["instance"] : doc;
    const auto failure = theorems::check(*theorem, instance);
    json report{{"theorem", opt.theorem}, {"replay", opt.replay}, {"holds", failure.empty()}};
    if (!failure.empty()) report["failure"] = failure;
    std::cout << report.dump(2) << "\n";
    return failure.empty() ? kOk : kViolated;
  }

  Stopwatch clock;
  int failures = 0;
  std::optional<int> first_failure;
  std::string first_message;
  for (int i = 0; i < opt.trials; ++i) {
    const auto seed = gen::trial_seed(opt.seed, static_cast<std::uint64_t>(i));
    const auto outcome = theorems::run_trial(*theorem, seed, opt.max_size);
    if (outcome.ok()) continue;
    ++failures;
    if (!first_failure) {
      first_failure = i;
      first_message = outcome.failure;
      json record{{"theorem", opt.theorem}, {"seed", opt.seed},   {"trial", i},
                  {"trial_seed", seed},     {"failure", outcome.failure}, {"instance", outcome.instance}};
      write_text(counterexample, record.dump(2) + "\n");
    }
  }
  json report{{"theorem", opt.theorem}, {"seed", opt.seed}, {"trials", opt.trials}, {"failures", failures}};
  if (first_failure) {
    report["first_failure"] = json{{"trial", *first_failure}, {"message", first_message}};
    report["counterexample"] = counterexample;
  }
  clock.stamp(opt, report);
  std::cout << report.dump(2) << "\n";
  return failures == 0 ? kOk : kViolated;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SizeCapExceeded*>(&e)) return kCap;
  if (dynamic_cast<const Uncoverable*>(&e)) return kUncoverable;
  if (dynamic_cast<const LemmaViolation*>(&e)) return kViolated;
  return kMalformed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Width and matching-width certificates for subtree, interval and point-tree hypergraphs.\n"
      "Exit codes: 0 ok, 1 malformed input, 2 size cap exceeded, 3 uncoverable, 4 property violated."};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("instance", opt.input, "instance JSON file ('-' for stdin)");
    sub->add_flag("--json", opt.json_output, "JSON output (the only format)");
    sub->add_flag("--deterministic", opt.deterministic, "omit timing so output is reproducible");
    sub->add_option("--cap", opt.cap, "override every size guard (at most 64)");
    sub->add_option("--out", opt.out, "write the report to FILE instead of stdout");
  };

  std::map<CLI::App*, std::function<int(const Options&)>> handlers;
  auto add = [&](const char* name, const char* help, std::function<int(const Options&)> fn, bool input = true) {
    auto* sub = app.add_subcommand(name, help);
    common(sub, input);
    handlers[sub] = std::move(fn);
    return sub;
  };

  add("widths", "w, mw, iw and imw with witnesses", cmd_widths);
  add("tree-reduce", "reduce h1 of a subtree instance to a width-preserving matching", cmd_tree_reduce);
  add("interval-cert", "greedy 2-remote set, cover and radius-1 partition of an interval family", cmd_interval_cert);
  add("interval-iw", "matching M with iw(M,F) = iw(F) for an interval family", cmd_interval_iw);
  add("ptree", "sigma, nu and the sigma certificate of a point-tree hypergraph", cmd_ptree);
  auto* power = add("power", "gamma_k, rho_k and the star order of a graph, poset or interval family", cmd_power);
  power->add_option("--k", opt.k, "distance bound k >= 1")->check(CLI::PositiveNumber);

  auto* gen_cmd = add("gen", "emit a seeded random instance", cmd_gen, false);
  gen_cmd->add_option("kind", opt.gen_kind, "tree | subtree | intervals | ptree | poset | family")->required();
  gen_cmd->add_option("--seed", opt.seed);
  gen_cmd->add_option("--n", opt.n, "tree vertices / poset size");
  gen_cmd->add_option("--count", opt.count, "intervals / hypergraphs");
  gen_cmd->add_option("--coord-range", opt.coord_range);
  gen_cmd->add_option("--max-len", opt.max_len);
  gen_cmd->add_option("--h2", opt.h2, "number of subtrees");
  gen_cmd->add_option("--h1-fraction", opt.h1_fraction);
  gen_cmd->add_option("--relation", opt.relation, "total | disjointness | custom");
  gen_cmd->add_option("--x-count", opt.x_count);
  gen_cmd->add_option("--edges", opt.edges);
  gen_cmd->add_flag("--singleton", opt.singleton, "point-tree edges with single-vertex trees");
  gen_cmd->add_option("--density", opt.density);

  auto* check = add("check", "run seeded random trials of one theorem", cmd_check, false);
  std::string ids;
  for (auto [t, n] : theorems::kNames) ids += (ids.empty() ? "" : " | ") + std::string(n);
  check->add_option("theorem", opt.theorem, ids)->required();
  check->add_option("--seed", opt.seed);
  check->add_option("--trials", opt.trials);
  check->add_option("--max-size", opt.max_size, "upper bound on the main size parameter");
  check->add_option("--replay", opt.replay, "re-check a counterexample file instead of sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  for (auto& [sub, fn] : handlers) {
    if (!sub->parsed()) continue;
    try {
      return fn(opt);
    } catch (const std::exception& e) {
      std::cerr << "mwidth " << sub->get_name() << ": " << e.what() << "\n";
      return exit_code_for(e);
    }
  }
  return kMalformed;
}
