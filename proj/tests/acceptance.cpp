// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "delegation/choice.hpp"
#include "delegation/eval.hpp"
#include "delegation/generate.hpp"
#include "delegation/io.hpp"
#include "delegation/lemmas.hpp"
#include "delegation/reduce.hpp"
#include "delegation/solve.hpp"

namespace {

using namespace delegation;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void(Verdict&)> run;
};

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

std::vector<Menu> random_menus(const Instance& inst, int count, std::mt19937_64& rng) {
  const auto n = inst.size();
  std::vector<Menu> out;
  while (static_cast<int>(out.size()) < count) {
    const auto mask = rng() % (1ULL << n);
    if (mask == 0 && !inst.has_outside()) continue;
    out.push_back(Menu::from_mask(mask, n));
  }
  return out;
}

std::vector<Menu> all_menus(const Instance& inst) {
  std::vector<Menu> out;
  const auto n = inst.size();
  for (unsigned long long mask = inst.has_outside() ? 0 : 1; mask < (1ULL << n); ++mask) {
    out.push_back(Menu::from_mask(mask, n));
  }
  return out;
}

RandomSpec independent_spec(std::uint64_t seed, OutsideMode outside) {
  RandomSpec spec;
  spec.kind = Kind::Independent;
  spec.n = 1 + static_cast<int>(seed % 4);
  spec.support_size = 1 + static_cast<int>((seed / 4) % 3);
  spec.seed = seed;
  spec.outside = outside;
  return spec;
}

// Criterion 3 ensemble: outside option absent, fixed or random.
Instance ensemble_any(std::uint64_t i) { return gen_random(independent_spec(1000 + i, OutsideMode::Any)); }

// Criterion 4 ensemble: outside option fixed or absent.
Instance ensemble_fixed(std::uint64_t i) {
  return gen_random(
      independent_spec(5000 + i, i % 2 ? OutsideMode::Fixed : OutsideMode::None));
}

// Every joint value vector (index 0..n) with its probability.
std::vector<std::pair<Rational, std::vector<XNum>>> joint_realizations(const Instance& inst) {
  std::vector<std::pair<Rational, std::vector<XNum>>> out;
  if (!inst.is_independent()) {
    for (const auto& p : inst.profiles()) out.emplace_back(p.prob, inst.profile_values(p));
    return out;
  }
  const auto n = inst.size();
  std::vector<std::size_t> pos(n + 1, 0);
  auto support_size = [&](std::size_t i) {
    return i == 0 && !inst.has_outside() ? std::size_t{1} : inst.action(i).support.size();
  };
  while (true) {
    Rational prob = 1;
    std::vector<XNum> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == 0 && !inst.has_outside()) continue;
      const auto& o = inst.action(i).support[pos[i]];
      values[i] = o.value;
      prob *= o.prob;
    }
    out.emplace_back(prob, std::move(values));
    std::size_t i = 0;
    while (i <= n && ++pos[i] == support_size(i)) pos[i++] = 0;
    if (i > n) break;
  }
  return out;
}

void criterion_1(Verdict& o) {
  const auto inst = gen_log_family(3);
  const auto opt = brute_force_opt(inst);
  o.expect(opt.menu == Menu({1, 3, 5}), "opt menu " + to_string(opt.menu));
  o.expect(opt.value == XNum(q(24, 7)), "opt value " + to_string(opt.value));
  const auto best = best_threshold(inst);
  o.expect(best.menu == Menu::all(5), "best threshold menu " + to_string(best.menu));
  o.expect(best.value == XNum(q(14, 7), q(9, 7)), "best threshold value " + to_string(best.value));
  if (o.ok) o.detail = "OPT {1,3,5} = 24/7, best threshold = all = 2+9/7i";
}

void criterion_2(Verdict& o) {
  std::ostringstream ratios;
  for (int k = 2; k <= 5; ++k) {
    const auto inst = gen_log_family(k);
    const auto r = solve(inst);
    const long two_k = 1L << k;
    const Rational expected = q(k * two_k, 2 * (two_k - 1));
    if (!r.ratio) {
      o.fail("k=" + std::to_string(k) + ": no ratio");
      continue;
    }
    o.expect(*r.ratio == expected, "k=" + std::to_string(k) + ": ratio " + to_string(*r.ratio));
    o.expect(*r.ratio >= q(k, 2), "k=" + std::to_string(k) + ": ratio below k/2");
    const auto b = bound_report(inst, r);
    o.expect(b.applies_log && b.bound_log, "k=" + std::to_string(k) + ": log bound fails");
    ratios << " k=" << k << ":" << to_string(*r.ratio);
  }
  if (o.ok) o.detail = "ratios" + ratios.str();
}

void criterion_3(Verdict& o) {
  std::mt19937_64 rng(31);
  int compared = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto inst = ensemble_any(i);
    for (const Menu& m : random_menus(inst, 5, rng)) {
      const auto dp = eval_independent_dp(inst, m);
      const auto bf = eval_bruteforce_product(inst, m);
      ++compared;
      if (dp.f != bf.f || dp.contrib != bf.contrib || dp.freq != bf.freq) {
        o.fail("instance " + std::to_string(i) + " menu " + to_string(m) + ": DP " +
               to_string(dp.f) + " vs oracle " + to_string(bf.f));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(compared) + " (instance, menu) pairs agree exactly";
}

void criterion_4(Verdict& o) {
  Rational worst = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto inst = ensemble_fixed(i);
    const auto r = solve(inst);
    const Rational opt = r.opt_value.std_part();
    const Rational best = r.best_threshold_value.std_part();
    o.expect(3 * best >= opt, "instance " + std::to_string(i) + ": best " + to_string(best) +
                                  " < OPT/3, OPT " + to_string(opt));
    if (r.ratio && *r.ratio > worst) worst = *r.ratio;
  }
  if (o.ok) o.detail = "200 instances, worst ratio " + to_string(worst);
}

void criterion_5(Verdict& o) {
  std::mt19937_64 rng(53);
  std::size_t checks = 0;
  auto run = [&](const Instance& inst, const std::string& tag) {
    for (const Menu& m : random_menus(inst, 5, rng)) {
      for (const auto& c : {check_decomposition(inst, m), check_threshold_dominance(inst, m),
                            check_single_action(inst, m)}) {
        ++checks;
        if (!c.ok) o.fail(tag + " " + c.name + " " + c.menu + ": " + c.detail);
      }
    }
  };
  for (std::uint64_t i = 0; i < 200; ++i) {
    run(ensemble_any(i), "any#" + std::to_string(i));
    run(ensemble_fixed(i), "fixed#" + std::to_string(i));
  }
  if (o.ok) o.detail = std::to_string(checks) + " lemma checks hold";
}

void criterion_6(Verdict& o) {
  std::size_t thresholds = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto inst = gen_random(independent_spec(9000 + i, OutsideMode::Any));
    const auto opt = brute_force_opt(inst);
    for (const auto& c : check_derandomization(inst, opt.menu)) {
      ++thresholds;
      if (!c.ok) o.fail("instance " + std::to_string(i) + " " + c.menu + ": " + c.detail);
    }
  }
  if (o.ok) o.detail = std::to_string(thresholds) + " thresholds certified";
}

void criterion_7(Verdict& o) {
  const auto half = gen_three_approx(q(1, 2));
  const auto f = evaluate(half, Menu({1, 3, 5})).f;
  o.expect(f.std_part() == q(7, 8), "f({1,3,5}) = " + to_string(f));
  const auto r = solve(gen_three_approx(q(1, 1000)));
  if (!r.ratio) {
    o.fail("no ratio at eps=1/1000");
    return;
  }
  o.expect(*r.ratio >= q(285, 100) && *r.ratio <= 3, "ratio " + to_string(*r.ratio));
  if (o.ok) o.detail = "f({1,3,5}) = 7/8 at eps=1/2; ratio " + to_string(*r.ratio) + " at eps=1/1000";
}

void criterion_8(Verdict& o) {
  const int n = 4;
  const auto inst = gen_outside_family(n);
  const Rational good = evaluate(inst, Menu({1, 3, 5, 7})).f.std_part();
  o.expect(good >= 1 - q(81, 256), "f(good) = " + to_string(good));
  const auto r = solve(inst);
  const Rational opt = r.opt_value.std_part();
  o.expect(n * r.best_threshold_value.std_part() >= opt, "best threshold below OPT/n");
  for (const auto& tm : threshold_menus(inst)) {
    const Rational v = evaluate(inst, tm.menu).f.std_part();
    o.expect(v * q(3, 2) <= opt, "threshold " + to_string(tm.menu) + " = " + to_string(v) +
                                     " exceeds OPT/1.5");
  }
  if (o.ok) {
    o.detail = "f(good) = " + to_string(good) + ", OPT = " + to_string(opt) + ", best threshold = " +
               to_string(r.best_threshold_value.std_part());
  }
}

void criterion_9(Verdict& o) {
  const std::vector<std::pair<std::string, Graph>> graphs{
      {"triangle", make_graph(3, {{1, 2}, {2, 3}, {1, 3}})},
      {"edge", make_graph(2, {{1, 2}})},
      {"P4", make_graph(4, {{1, 2}, {2, 3}, {3, 4}})},
      {"C5", make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})},
  };
  std::ostringstream values;
  for (const auto& [name, g] : graphs) {
    const auto opt = brute_force_opt(reduce_vertex_cover(g)).value.std_part();
    const auto formula = vertex_cover_optimum(g, min_vertex_cover(g));
    o.expect(opt == formula, name + ": OPT " + to_string(opt) + " vs formula " + to_string(formula));
    values << ' ' << name << '=' << to_string(opt);
  }
  if (o.ok) o.detail = "OPT equals (5m+3n-k)/(m+n):" + values.str();
}

void criterion_10(Verdict& o) {
  std::ostringstream summary;
  for (const PartitionInstance& p : {PartitionInstance{{1, 1, 2}}, PartitionInstance{{1, 1, 3}}}) {
    const auto red = reduce_integer_partition(p, min_partition_m(p));
    const auto opt = brute_force_opt(red.instance).value.std_part();
    const bool reaches = opt >= red.decision_threshold;
    const bool expected = p.c[2] == 2;
    std::string name = "(1,1," + std::to_string(p.c[2]) + ")";
    o.expect(reaches == expected, name + ": OPT vs threshold gives " + (reaches ? "yes" : "no"));
    o.expect(reaches == has_partition(p), name + ": disagrees with has_partition");
    summary << ' ' << name << (reaches ? " reaches" : " misses");
  }
  if (o.ok) o.detail = "decision threshold:" + summary.str();
}

void criterion_11(Verdict& o) {
  std::mt19937_64 rng(1111);
  std::size_t menus_checked = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    RandomSpec spec;
    spec.kind = i % 2 ? Kind::Correlated : Kind::Independent;
    spec.n = 1 + static_cast<int>(i % 4);
    spec.support_size = 1 + static_cast<int>(i % 3);
    spec.seed = 20000 + i;
    const auto inst = gen_random(spec);
    const XNum c(Rational(static_cast<long>(rng() % 13) - 6, 2),
                 Rational(static_cast<long>(rng() % 5) - 2));
    const auto shifted = shift_biases(inst, c);
    const auto joint = joint_realizations(inst);
    for (const Menu& m : all_menus(inst)) {
      ++menus_checked;
      for (const auto& [prob, values] : joint) {
        if (agent_choice(inst, m, values) != agent_choice(shifted, m, values)) {
          o.fail("instance " + std::to_string(i) + " menu " + to_string(m) + ": choice changes");
          break;
        }
      }
      if (evaluate(inst, m).f != evaluate(shifted, m).f) {
        o.fail("instance " + std::to_string(i) + " menu " + to_string(m) + ": f changes");
      }
    }
    const auto text = serialize(inst);
    o.expect(parse_instance(text) == inst && serialize(parse_instance(text)) == text,
             "instance " + std::to_string(i) + ": round trip differs");
    o.expect(gen_random(spec) == inst, "instance " + std::to_string(i) + ": generation not deterministic");
  }
  for (const auto& inst : {gen_log_family(3), gen_three_approx(q(1, 1000)), gen_outside_family(4)}) {
    o.expect(parse_instance(serialize(inst)) == inst, "family round trip differs");
  }
  if (o.ok) {
    o.detail = "100 instances, " + std::to_string(menus_checked) +
               " menus shift-invariant; round trip and seeding exact";
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "log family k=3 worked example", 1, criterion_1},
      {2, "log family scaling k=2..5", 30, criterion_2},
      {3, "DP equals product oracle", 60, criterion_3},
      {4, "best threshold >= OPT/3", 120, criterion_4},
      {5, "decomposition and threshold lemmas", 120, criterion_5},
      {6, "derandomization certificates", 60, criterion_6},
      {7, "three-approx tight example", 10, criterion_7},
      {8, "random outside option family n=4", 10, criterion_8},
      {9, "vertex cover identity", 10, criterion_9},
      {10, "integer partition decision", 60, criterion_10},
      {11, "shift invariance, round trip, determinism", 60, criterion_11},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.limit_s) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    }
    failures += o.ok ? 0 : 1;
    std::printf("criterion %2d: %s  %s (%.3f s)  %s\n", c.id, o.ok ? "PASS" : "FAIL",
                c.name.c_str(), secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
