// delegate: command-line front end for the delegation toolkit.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "delegation/error.hpp"
#include "delegation/eval.hpp"
#include "delegation/generate.hpp"
#include "delegation/io.hpp"
#include "delegation/lemmas.hpp"
#include "delegation/reduce.hpp"
#include "delegation/solve.hpp"
#include "delegation/sweep.hpp"

namespace {

using namespace delegation;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitBound = 4;

struct Common {
  std::size_t cap_n = 20;
  std::size_t cap_profiles = kDefaultProfileCap;
  unsigned jobs = 1;
  std::string format = "json";
};

json menu_json(const Menu& m) {
  json out = json::array();
  for (std::size_t i : m) out.push_back(i);
  return out;
}

json optional_rational(const std::optional<Rational>& r) {
  return r ? json(to_string(*r)) : json(nullptr);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_profile_cap(const Instance& inst, std::size_t cap) {
  if (!inst.is_independent() && inst.profiles().size() > cap) {
    throw CapExceeded(std::to_string(inst.profiles().size()) +
                      " profiles exceed --cap-profiles " + std::to_string(cap));
  }
}

// ---- eval ----

struct EvalArgs {
  std::string file;
  std::string menu = "all";
  bool bruteforce = false;
};

int run_eval(const EvalArgs& a, const Common& c) {
  const Instance inst = load_instance(a.file);
  check_profile_cap(inst, c.cap_profiles);
  const Menu menu = parse_menu(inst, a.menu);
  const EvalReport r = a.bruteforce && inst.is_independent()
                           ? eval_bruteforce_product(inst, menu, c.cap_profiles)
                           : evaluate(inst, menu);
  if (c.format == "csv") {
    std::cout << "index,contrib_std,contrib_inf,freq\n";
    for (const auto& [i, v] : r.contrib) {
      std::cout << i << ',' << to_string(v.std_part()) << ',' << to_string(v.inf_part()) << ','
                << to_string(r.freq.at(i)) << '\n';
    }
    std::cout << "total," << to_string(r.f.std_part()) << ',' << to_string(r.f.inf_part())
              << ",1\n";
  } else if (c.format == "text") {
    std::cout << "menu " << to_string(menu) << "\nf " << to_string(r.f) << '\n';
    for (const auto& [i, v] : r.contrib) {
      std::cout << "action " << i << " contrib " << to_string(v) << " freq "
                << to_string(r.freq.at(i)) << '\n';
    }
  } else {
    json out;
    out["menu"] = menu_json(menu);
    out["f"] = to_json(r.f);
    json actions = json::array();
    for (const auto& [i, v] : r.contrib) {
      actions.push_back({{"index", i}, {"contrib", to_json(v)}, {"freq", to_string(r.freq.at(i))}});
    }
    out["actions"] = std::move(actions);
    std::cout << out.dump(2) << '\n';
  }
  return kExitOk;
}

// ---- solve ----

json bounds_json(const BoundReport& b) {
  return {{"rho", optional_rational(b.rho)},
          {"p_min", to_string(b.p_min)},
          {"vacuous", b.vacuous},
          {"applies", {{"bound_3", b.applies_3}, {"bound_n", b.applies_n}, {"bound_log", b.applies_log}}},
          {"bound_3", b.bound_3},
          {"bound_n", b.bound_n},
          {"bound_log", b.bound_log}};
}

int run_solve(const std::string& file, const Common& c) {
  const Instance inst = load_instance(file);
  check_profile_cap(inst, c.cap_profiles);
  const SolveResult r = solve(inst, {c.cap_n, c.jobs});
  const BoundReport b = bound_report(inst, r);
  if (c.format == "csv") {
    SweepRow row;
    row.instance_id = file;
    row.n = inst.size();
    row.kind = inst.kind();
    row.result = r;
    row.bounds = b;
    write_sweep_csv(std::cout, {row}, false);
  } else if (c.format == "text") {
    std::cout << "opt_menu " << to_string(r.opt_menu) << "\nopt_value " << to_string(r.opt_value)
              << "\nbest_threshold " << (r.best_threshold ? to_string(*r.best_threshold) : "empty")
              << "\nbest_threshold_menu " << to_string(r.best_threshold_menu)
              << "\nbest_threshold_value " << to_string(r.best_threshold_value) << "\nratio "
              << (r.ratio ? to_string(*r.ratio) : "undefined") << "\nbounds "
              << (b.all_hold() ? "hold" : "VIOLATED") << '\n';
  } else {
    json out;
    out["opt"] = {{"menu", menu_json(r.opt_menu)}, {"value", to_json(r.opt_value)}};
    out["best_threshold"] = {
        {"t", r.best_threshold ? to_json(*r.best_threshold) : json(nullptr)},
        {"menu", menu_json(r.best_threshold_menu)},
        {"value", to_json(r.best_threshold_value)}};
    out["ratio"] = optional_rational(r.ratio);
    out["ratio_decimal"] = r.ratio ? json(decimal12(*r.ratio)) : json(nullptr);
    out["bounds"] = bounds_json(b);
    std::cout << out.dump(2) << '\n';
  }
  return b.all_hold() ? kExitOk : kExitBound;
}

// ---- generate ----

struct GenArgs {
  int k = 3;
  int n = 3;
  std::string eps;
  bool alternative_low = false;
  std::string kind = "independent";
  int support = 2;
  int profiles = 4;
  std::uint64_t seed = 0;
  std::string outside = "any";
  std::string spec_file;
  std::string out;
};

Kind parse_kind(const std::string& s) {
  if (s == "independent") return Kind::Independent;
  if (s == "correlated") return Kind::Correlated;
  throw InputError("unknown kind '" + s + "'");
}

OutsideMode parse_outside(const std::string& s) {
  if (s == "none") return OutsideMode::None;
  if (s == "fixed") return OutsideMode::Fixed;
  if (s == "random") return OutsideMode::Random;
  if (s == "any") return OutsideMode::Any;
  throw InputError("unknown outside mode '" + s + "'");
}

DiscreteDistribution distribution_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of {value, prob}");
  DiscreteDistribution d;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_object() || !j[i].contains("value") || !j[i].contains("prob")) {
      throw InputError(w + ": expected {value, prob}");
    }
    const auto& p = j[i]["prob"];
    const Rational prob = parse_rational(p.is_string() ? p.get<std::string>() : p.dump());
    d.outcomes.push_back({xnum_from_json(j[i]["value"], w + ".value"), prob});
  }
  return d;
}

// {"eps": "1/100", "revenues": [...], "utilities": [[{value, prob}...]...], "outside": [...]|null}
Instance assortment_from_file(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("revenues") || !doc.contains("utilities") ||
      !doc.contains("eps")) {
    throw InputError(path + ": expected fields eps, revenues, utilities");
  }
  std::vector<Rational> revenues;
  for (std::size_t i = 0; i < doc["revenues"].size(); ++i) {
    revenues.push_back(xnum_from_json(doc["revenues"][i], "$.revenues[" + std::to_string(i) + "]")
                           .std_part());
  }
  std::vector<DiscreteDistribution> utils;
  for (std::size_t i = 0; i < doc["utilities"].size(); ++i) {
    utils.push_back(distribution_from_json(doc["utilities"][i],
                                           "$.utilities[" + std::to_string(i) + "]"));
  }
  std::optional<DiscreteDistribution> outside;
  if (doc.contains("outside") && !doc["outside"].is_null()) {
    outside = distribution_from_json(doc["outside"], "$.outside");
  }
  return from_assortment(revenues, utils, outside,
                         xnum_from_json(doc["eps"], "$.eps").std_part());
}

Instance generate_family(const std::string& family, const GenArgs& a) {
  if (family == "log") return gen_log_family(a.k);
  if (family == "three-approx") {
    return gen_three_approx(a.eps.empty() ? Rational(1, 1000) : parse_rational(a.eps));
  }
  if (family == "outside") {
    OutsideFamilyOptions opt;
    if (!a.eps.empty()) opt.eps = parse_rational(a.eps);
    opt.alternative_low = a.alternative_low;
    return gen_outside_family(a.n, opt);
  }
  if (family == "random") {
    RandomSpec spec;
    spec.kind = parse_kind(a.kind);
    spec.n = a.n;
    spec.support_size = a.support;
    spec.profiles = a.profiles;
    spec.seed = a.seed;
    spec.outside = parse_outside(a.outside);
    return gen_random(spec);
  }
  if (family == "assortment") {
    if (a.spec_file.empty()) throw InputError("assortment needs --spec <file>");
    return assortment_from_file(a.spec_file);
  }
  throw InputError("unknown family '" + family + "'");
}

// ---- reduce ----

struct ReduceArgs {
  std::string problem;
  std::string input;
  std::string m;
  std::string out;
};

PartitionInstance read_partition(const std::string& path) {
  std::istringstream in(read_file(path));
  PartitionInstance p;
  std::string tok;
  while (in >> tok) {
    if (tok.starts_with('#')) {
      std::getline(in, tok);
      continue;
    }
    try {
      std::size_t used = 0;
      p.c.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InputError(path + ": invalid integer '" + tok + "'");
    }
  }
  return p;
}

int run_reduce(const ReduceArgs& a) {
  if (a.problem == "vertex-cover") {
    std::istringstream in(read_file(a.input));
    const Graph g = parse_edge_list(in);
    const Instance inst = reduce_vertex_cover(g);
    write_output(a.out, serialize(inst));
    std::cerr << "vertices " << g.vertex_count << "\nedges " << g.edges.size() << "\nmax_degree "
              << g.max_degree() << "\naction_count " << inst.size() << "\nprofile_count "
              << inst.profiles().size() << "\noptimum_formula (5m+3n-k)/(m+n)\n";
    if (g.vertex_count <= 20) {
      const auto k = min_vertex_cover(g);
      std::cerr << "min_vertex_cover " << k << "\npredicted_optimum "
                << to_string(vertex_cover_optimum(g, k)) << '\n';
    }
    return kExitOk;
  }
  if (a.problem == "partition") {
    const PartitionInstance p = read_partition(a.input);
    const Rational m = a.m.empty() ? min_partition_m(p) : parse_rational(a.m);
    const PartitionReduction red = reduce_integer_partition(p, m);
    write_output(a.out, serialize(red.instance));
    std::cerr << "M " << to_string(m) << "\nC " << p.total() << "\ndecision_threshold "
              << to_string(red.decision_threshold) << "\ndecision_threshold_decimal "
              << decimal12(red.decision_threshold) << '\n';
    return kExitOk;
  }
  throw InputError("unknown problem '" + a.problem + "'");
}

// ---- sweep ----

struct SweepArgs {
  std::string ensemble;
  std::string kind = "independent";
  int count = 0;
  int n = 3;
  int support = 2;
  int profiles = 4;
  std::uint64_t seed = 0;
  std::string outside = "any";
  std::string out;
  bool no_timing = false;
};

// {"instances": [{"id": "...", "file": "path"} | {"id": "...", "family": "...", ...params}]}
std::vector<SweepItem> ensemble_from_file(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("instances") || !doc["instances"].is_array()) {
    throw InputError(path + ": expected {\"instances\": [...]}");
  }
  std::vector<SweepItem> items;
  for (std::size_t i = 0; i < doc["instances"].size(); ++i) {
    const auto& e = doc["instances"][i];
    const std::string where = "$.instances[" + std::to_string(i) + "]";
    if (!e.is_object()) throw InputError(where + ": expected an object");
    std::string id = e.value("id", "item" + std::to_string(i));
    if (e.contains("file")) {
      const std::string file = e["file"].get<std::string>();
      items.push_back({id, [file] { return load_instance(file); }});
      continue;
    }
    if (!e.contains("family")) throw InputError(where + ": needs 'file' or 'family'");
    GenArgs g;
    g.k = e.value("k", g.k);
    g.n = e.value("n", g.n);
    g.eps = e.value("eps", g.eps);
    g.alternative_low = e.value("alternative_low", false);
    g.kind = e.value("kind", g.kind);
    g.support = e.value("support", g.support);
    g.profiles = e.value("profiles", g.profiles);
    g.seed = e.value("seed", g.seed);
    g.outside = e.value("outside", g.outside);
    g.spec_file = e.value("spec", std::string());
    const std::string family = e["family"].get<std::string>();
    items.push_back({id, [family, g] { return generate_family(family, g); }});
  }
  return items;
}

int run_sweep_cmd(const SweepArgs& a, const Common& c) {
  std::vector<SweepItem> items;
  if (!a.ensemble.empty()) {
    items = ensemble_from_file(a.ensemble);
  } else {
    const Kind kind = parse_kind(a.kind);
    const OutsideMode outside = parse_outside(a.outside);
    for (int i = 0; i < a.count; ++i) {
      RandomSpec spec;
      spec.kind = kind;
      spec.n = a.n;
      spec.support_size = a.support;
      spec.profiles = a.profiles;
      spec.seed = a.seed + static_cast<std::uint64_t>(i);
      spec.outside = outside;
      items.push_back({"random-" + std::to_string(spec.seed), [spec] { return gen_random(spec); }});
    }
  }
  const auto rows = run_sweep(items, {{c.cap_n, 1}, c.jobs});
  std::ostringstream csv;
  write_sweep_csv(csv, rows, !a.no_timing);
  write_output(a.out, csv.str());
  return sweep_bounds_hold(rows) ? kExitOk : kExitBound;
}

// ---- verify ----

struct VerifyArgs {
  std::string file;
  std::string menu;
  int menus = 16;
  std::uint64_t seed = 0;
};

std::vector<Menu> verification_menus(const Instance& inst, int count, std::uint64_t seed) {
  const auto n = inst.size();
  std::vector<Menu> out;
  if (n <= 6) {
    for (unsigned long long mask = inst.has_outside() ? 0 : 1; mask < (1ULL << n); ++mask) {
      out.push_back(Menu::from_mask(mask, n));
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  while (static_cast<int>(out.size()) < count) {
    const auto mask = rng() & ((1ULL << n) - 1);
    if (mask == 0 && !inst.has_outside()) continue;
    out.push_back(Menu::from_mask(mask, n));
  }
  return out;
}

int run_verify(const VerifyArgs& a, const Common& c) {
  const Instance inst = load_instance(a.file);
  check_profile_cap(inst, c.cap_profiles);
  const Menu opt = a.menu.empty() ? brute_force_opt(inst, {c.cap_n, c.jobs}).menu
                                  : parse_menu(inst, a.menu);
  const auto checks = verify_lemmas(inst, opt, verification_menus(inst, a.menus, a.seed));
  std::size_t failed = 0;
  for (const auto& ch : checks) failed += ch.ok ? 0 : 1;
  if (c.format == "csv") {
    std::cout << "check,menu,ok,detail\n";
    for (const auto& ch : checks) {
      std::cout << ch.name << ",\"" << ch.menu << "\"," << (ch.ok ? "true" : "false") << ",\""
                << ch.detail << "\"\n";
    }
  } else if (c.format == "text") {
    for (const auto& ch : checks) {
      std::cout << (ch.ok ? "ok   " : "FAIL ") << ch.name << ' ' << ch.menu;
      if (!ch.detail.empty()) std::cout << "  " << ch.detail;
      std::cout << '\n';
    }
    std::cout << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  } else {
    json out;
    out["opt_menu"] = menu_json(opt);
    out["checks"] = json::array();
    for (const auto& ch : checks) {
      out["checks"].push_back(
          {{"name", ch.name}, {"menu", ch.menu}, {"ok", ch.ok}, {"detail", ch.detail}});
    }
    out["passed"] = checks.size() - failed;
    out["failed"] = failed;
    std::cout << out.dump(2) << '\n';
  }
  return failed == 0 ? kExitOk : kExitBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delegation toolkit: evaluate, solve and generate delegation instances"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub, bool format) {
    sub->add_option("--cap-n", common.cap_n, "Largest n for subset enumeration");
    sub->add_option("--cap-profiles", common.cap_profiles,
                    "Largest explicit profile count to enumerate");
    sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (format) {
      sub->add_option("--format", common.format, "Output format")
          ->check(CLI::IsMember({"json", "csv", "text"}));
    }
  };

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Expected principal utility of a menu");
  eval->add_option("file", eval_args.file, "Instance JSON")->required();
  eval->add_option("--menu", eval_args.menu, "all | empty | threshold:<t> | i,j,...");
  eval->add_flag("--bruteforce", eval_args.bruteforce,
                 "Enumerate the joint support instead of running the DP");
  add_common(eval, true);

  std::string solve_file;
  auto* solve_cmd = app.add_subcommand("solve", "Optimal menu, best threshold and bounds");
  solve_cmd->add_option("file", solve_file, "Instance JSON")->required();
  add_common(solve_cmd, true);

  GenArgs gen_args;
  std::string family;
  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  gen->add_option("family", family, "log | three-approx | outside | random | assortment")
      ->required();
  gen->add_option("--k", gen_args.k, "log: size parameter");
  gen->add_option("--n", gen_args.n, "outside, random: size parameter");
  gen->add_option("--eps", gen_args.eps, "three-approx, outside: rational eps");
  gen->add_flag("--alternative-low", gen_args.alternative_low, "outside: alternative low values");
  gen->add_option("--kind", gen_args.kind, "random: independent | correlated");
  gen->add_option("--support", gen_args.support, "random: support size");
  gen->add_option("--profiles", gen_args.profiles, "random: profile count");
  gen->add_option("--seed", gen_args.seed, "random: seed");
  gen->add_option("--outside", gen_args.outside, "random: none | fixed | random | any");
  gen->add_option("--spec", gen_args.spec_file, "assortment: JSON specification");
  gen->add_option("-o,--out", gen_args.out, "Output file (default stdout)");

  ReduceArgs reduce_args;
  auto* red = app.add_subcommand("reduce", "Build a reduction instance");
  red->add_option("problem", reduce_args.problem, "vertex-cover | partition")->required();
  red->add_option("input", reduce_args.input, "Edge list or whitespace-separated integers")
      ->required();
  red->add_option("--m", reduce_args.m, "partition: M (default: smallest valid)");
  red->add_option("-o,--out", reduce_args.out, "Output file (default stdout)");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Solve an ensemble and check the bounds");
  sweep->add_option("--ensemble", sweep_args.ensemble, "Ensemble JSON");
  sweep->add_option("--kind", sweep_args.kind, "Random ensemble kind");
  sweep->add_option("--count", sweep_args.count, "Random ensemble size");
  sweep->add_option("--n", sweep_args.n, "Actions per random instance");
  sweep->add_option("--support", sweep_args.support, "Support size");
  sweep->add_option("--profiles", sweep_args.profiles, "Profiles per correlated instance");
  sweep->add_option("--seed", sweep_args.seed, "First seed");
  sweep->add_option("--outside", sweep_args.outside, "none | fixed | random | any");
  sweep->add_option("-o,--out", sweep_args.out, "CSV output (default stdout)");
  sweep->add_flag("--no-timing", sweep_args.no_timing, "Write runtime_ms as 0 for byte-stable output");
  add_common(sweep, false);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the lemma checks on an instance");
  verify->add_option("file", verify_args.file, "Instance JSON")->required();
  verify->add_option("--menu", verify_args.menu, "Reference menu (default: brute-force optimum)");
  verify->add_option("--menus", verify_args.menus, "Random menus to check when n > 6");
  verify->add_option("--seed", verify_args.seed, "Seed for the random menus");
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*eval) return run_eval(eval_args, common);
    if (*solve_cmd) return run_solve(solve_file, common);
    if (*gen) {
      write_output(gen_args.out, serialize(generate_family(family, gen_args)));
      return kExitOk;
    }
    if (*red) return run_reduce(reduce_args);
    if (*sweep) return run_sweep_cmd(sweep_args, common);
    if (*verify) return run_verify(verify_args, common);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSemantic;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
