#include "delegation/solve.hpp"

#include <algorithm>
#include <thread>

#include <mpfr.h>

#include "delegation/error.hpp"

namespace delegation {

namespace {

bool better(const MenuValue& a, const MenuValue& b) {
  if (auto c = a.value <=> b.value; c != 0) return c > 0;
  return a.menu < b.menu;
}

/// Returns k if r = 2^k for an integer k.
std::optional<long> exact_log2(const Rational& r) {
  auto pow2 = [](const mpz_class& z) -> std::optional<long> {
    if (z <= 0) return std::nullopt;
    const auto bit = mpz_scan1(z.get_mpz_t(), 0);
    if (mpz_sizeinbase(z.get_mpz_t(), 2) != bit + 1) return std::nullopt;
    return static_cast<long>(bit);
  };
  const auto num = pow2(r.get_num());
  const auto den = pow2(r.get_den());
  if (!num || !den) return std::nullopt;
  return *num - *den;
}

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

MenuValue brute_force_opt(const Instance& instance, const SolveOptions& options) {
  const std::size_t n = instance.size();
  if (n > options.cap_n || n >= 63) {
    throw CapExceeded("brute force over " + std::to_string(n) +
                      " actions exceeds cap " + std::to_string(options.cap_n));
  }
  const unsigned long long first = instance.has_outside() ? 0 : 1;
  const unsigned long long end = 1ULL << n;
  if (first >= end) throw SemanticError("no feasible action");

  const unsigned jobs = std::max(1U, options.jobs);
  std::vector<std::optional<MenuValue>> local(jobs);
  auto work = [&](unsigned w) {
    for (unsigned long long mask = first + w; mask < end; mask += jobs) {
      MenuValue mv{Menu::from_mask(mask, n), XNum()};
      mv.value = evaluate(instance, mv.menu).f;
      if (!local[w] || better(mv, *local[w])) local[w] = std::move(mv);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  std::optional<MenuValue> best;
  for (auto& l : local) {
    if (l && (!best || better(*l, *best))) best = std::move(l);
  }
  return std::move(*best);
}

std::vector<ThresholdMenu> threshold_menus(const Instance& instance) {
  std::vector<XNum> biases;
  for (const auto& a : instance.actions()) biases.push_back(a.bias);
  std::sort(biases.begin(), biases.end());
  biases.erase(std::unique(biases.begin(), biases.end()), biases.end());

  std::vector<ThresholdMenu> out;
  if (instance.has_outside()) out.push_back(ThresholdMenu{std::nullopt, Menu()});
  for (const auto& t : biases) {
    out.push_back(ThresholdMenu{t, threshold_menu(instance, t)});
  }
  return out;
}

ThresholdChoice best_threshold(const Instance& instance) {
  std::optional<ThresholdChoice> best;
  for (auto& tm : threshold_menus(instance)) {
    XNum value = evaluate(instance, tm.menu).f;
    if (!best || value > best->value) {
      best = ThresholdChoice{tm.t, std::move(tm.menu), std::move(value)};
    }
  }
  if (!best) throw SemanticError("no feasible action");
  return std::move(*best);
}

SolveResult solve(const Instance& instance, const SolveOptions& options) {
  MenuValue opt = brute_force_opt(instance, options);
  ThresholdChoice thr = best_threshold(instance);
  SolveResult r;
  r.opt_menu = std::move(opt.menu);
  r.opt_value = std::move(opt.value);
  r.best_threshold = std::move(thr.t);
  r.best_threshold_menu = std::move(thr.menu);
  r.best_threshold_value = std::move(thr.value);
  if (r.best_threshold_value.std_part() > 0) {
    r.ratio = Rational(r.opt_value.std_part() / r.best_threshold_value.std_part());
  }
  return r;
}

Rational min_profile_mass(const Instance& instance) {
  if (!instance.is_independent()) {
    Rational best = 1;
    for (const auto& p : instance.profiles()) best = std::min(best, p.prob);
    return best;
  }
  Rational mass = 1;
  auto factor = [&](const Action& a) {
    Rational m = a.support.front().prob;
    for (const auto& o : a.support) m = std::min(m, o.prob);
    mass *= m;
  };
  for (const auto& a : instance.actions()) factor(a);
  if (instance.has_outside()) factor(*instance.outside());
  return mass;
}

bool log2_at_least(const Rational& x, const Rational& y) {
  if (x <= 0) throw SemanticError("log2 of a non-positive number");
  if (const auto k = exact_log2(x)) return Rational(*k) >= y;
  // log2(x) is irrational here, so refining the enclosure terminates.
  for (mpfr_prec_t prec = 128; prec <= (1 << 20); prec *= 2) {
    MpfrValue xl(prec), xh(prec), yl(prec), yh(prec);
    mpfr_set_q(xl.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(xh.get(), x.get_mpq_t(), MPFR_RNDU);
    mpfr_log2(xl.get(), xl.get(), MPFR_RNDD);
    mpfr_log2(xh.get(), xh.get(), MPFR_RNDU);
    mpfr_set_q(yl.get(), y.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(yh.get(), y.get_mpq_t(), MPFR_RNDU);
    if (mpfr_cmp(xl.get(), yh.get()) >= 0) return true;
    if (mpfr_cmp(xh.get(), yl.get()) < 0) return false;
  }
  throw SemanticError("log2 comparison did not resolve");
}

BoundReport bound_report(const Instance& instance, const SolveResult& result) {
  BoundReport b;
  b.p_min = min_profile_mass(instance);
  b.applies_3 = instance.is_independent() && instance.outside_fixed();
  b.applies_n = instance.is_independent();
  b.applies_log = !instance.is_independent();

  const Rational& opt = result.opt_value.std_part();
  const Rational& best = result.best_threshold_value.std_part();
  if (opt <= 0) {
    b.vacuous = true;
    return b;
  }
  b.rho = Rational(instance.max_action_value().std_part() / opt);

  if (b.applies_3) b.bound_3 = 3 * best >= opt;
  if (b.applies_n) {
    b.bound_n = Rational(static_cast<unsigned long>(instance.size())) * best >= opt;
  }
  if (b.applies_log) {
    if (best <= 0) {
      b.bound_log = false;
    } else {
      // best >= opt / (4·max(1, log2(1/p))) <=> opt/best <= 4 or log2(1/p) >= opt/(4·best)
      const Rational ratio = opt / best;
      b.bound_log = ratio <= 4 || log2_at_least(Rational(1 / b.p_min), Rational(ratio / 4));
    }
  }
  return b;
}

}  // namespace delegation
