#include "delegation/generate.hpp"

#include <random>
#include <set>

#include "delegation/error.hpp"

namespace delegation {

namespace {

Rational pow_rational(long base, long exp) {
  mpz_class b = base, r;
  if (exp >= 0) {
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(r);
  }
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-exp));
  return Rational(mpz_class(1), r);
}

Action point_action(XNum bias, XNum value, std::string label) {
  return Action{std::move(bias), {Outcome{std::move(value), 1}}, std::move(label)};
}

Action two_point_action(XNum bias, XNum high, const Rational& p_high, XNum low,
                        std::string label) {
  return Action{std::move(bias),
                {Outcome{std::move(high), p_high}, Outcome{std::move(low), 1 - p_high}},
                std::move(label)};
}

/// Portable draws from a seeded engine; std distributions are not
/// reproducible across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<Rational> random_probs(Draw& d, int count) {
  std::vector<long> w(static_cast<std::size_t>(count));
  long total = 0;
  for (auto& x : w) total += x = d.uniform(1, 6);
  std::vector<Rational> p;
  for (long x : w) p.emplace_back(Rational(x, total));
  for (auto& x : p) x.canonicalize();
  return p;
}

XNum random_value(Draw& d, const RandomSpec& s) {
  return XNum(Rational(d.uniform(0, static_cast<long>(s.value_max) * s.value_den),
                       s.value_den),
              d.uniform(0, 2));
}

XNum random_bias(Draw& d, const RandomSpec& s) {
  const long range = static_cast<long>(s.bias_max) * s.bias_den;
  return XNum(Rational(d.uniform(-range, range), s.bias_den), d.uniform(-1, 1));
}

std::vector<Outcome> random_support(Draw& d, const RandomSpec& s) {
  const long grid = (static_cast<long>(s.value_max) * s.value_den + 1) * 3;
  const int size = static_cast<int>(std::min<long>(s.support_size, grid));
  std::set<XNum> seen;
  std::vector<Outcome> out;
  const auto probs = random_probs(d, size);
  while (static_cast<int>(out.size()) < size) {
    XNum v = random_value(d, s);
    if (!seen.insert(v).second) continue;
    out.push_back(Outcome{std::move(v), probs[out.size()]});
  }
  return out;
}

}  // namespace

Instance gen_log_family(int k) {
  if (k < 2 || k > 16) {
    throw SemanticError("log family needs 2 <= k <= 16, got " + std::to_string(k));
  }
  const std::size_t n = 2 * static_cast<std::size_t>(k) - 1;
  const std::size_t m = (std::size_t{1} << k) - 1;
  const Rational pow2k = pow_rational(2, k);

  // Odd action 2i+1 (i = 0..k-1) takes 2^(k-i) on columns 2^i..2^(i+1)-1;
  // even action 2i (i = 1..k-1) takes 2^(k-i) + (i+1)ι on columns 1..2^i-1.
  std::vector<std::vector<XNum>> columns(m, std::vector<XNum>(n));
  std::vector<Action> actions(n);
  for (int i = 0; i < k; ++i) {
    const std::size_t row = 2 * static_cast<std::size_t>(i);  // action 2i+1
    const Rational bias = pow2k - pow_rational(2, k - i);     // 0 for i = 0
    actions[row].bias = XNum(bias);
    actions[row].label = "odd" + std::to_string(i + 1);
    for (std::size_t c = std::size_t{1} << i; c < (std::size_t{2} << i); ++c) {
      columns[c - 1][row] = XNum(pow_rational(2, k - i));
    }
    if (i == 0) continue;
    const std::size_t even = row - 1;  // action 2i
    actions[even].bias = XNum(bias, -1);
    actions[even].label = "even" + std::to_string(i);
    for (std::size_t c = 1; c < (std::size_t{1} << i); ++c) {
      columns[c - 1][even] = XNum(pow_rational(2, k - i), i + 1);
    }
  }

  std::vector<Profile> profiles;
  profiles.reserve(m);
  const Rational p(1, static_cast<unsigned long>(m));
  for (auto& col : columns) profiles.push_back(Profile{p, std::move(col)});
  return Instance::correlated(std::move(actions), std::move(profiles));
}

Instance gen_three_approx(const Rational& eps) {
  if (eps <= 0 || eps >= 1) {
    throw SemanticError("three-approx family needs 0 < eps < 1, got " + to_string(eps));
  }
  std::vector<Action> a;
  a.push_back(two_point_action(XNum(0), XNum(1, 2), eps, XNum(0), "a1"));
  a.push_back(point_action(XNum(1 - eps, -1), XNum(eps, 4), "a2"));
  a.push_back(point_action(XNum(1 - eps), XNum(eps, 1), "a3"));
  a.push_back(point_action(XNum(1, -1), XNum(0, 5), "a4"));
  a.push_back(two_point_action(XNum(1), XNum(1), eps, XNum(0), "a5"));
  return Instance::independent(std::move(a));
}

Instance gen_outside_family(int n, const OutsideFamilyOptions& options) {
  if (n < 2 || n > 6) {
    throw SemanticError("outside family needs 2 <= n <= 6, got " + std::to_string(n));
  }
  const Rational eps = options.eps ? *options.eps : pow_rational(n, -2 * n);
  if (eps <= 0) throw SemanticError("outside family needs eps > 0");
  const Rational top = pow_rational(n, n - 1);
  const Rational p_high(1, n);

  std::vector<Action> actions;
  for (int i = 1; i <= n; ++i) {
    const Rational scale = pow_rational(n, n - i);
    const XNum bias(top - scale);
    if (i > 1) {
      actions.push_back(point_action(bias, XNum(scale + (i - 1) * eps, 1),
                                     "bad" + std::to_string(i)));
    }
    const XNum low = options.alternative_low ? XNum(scale - eps) : XNum(0);
    actions.push_back(two_point_action(bias, XNum(scale + i * eps), p_high, low,
                                       "good" + std::to_string(i)));
  }

  // Pr[v_0 < iε] = n^-(n-i).
  Action outside;
  outside.bias = XNum(top);
  outside.label = "outside";
  outside.support.push_back(Outcome{XNum(eps / 2), pow_rational(n, -(n - 1))});
  for (int i = 2; i <= n; ++i) {
    outside.support.push_back(
        Outcome{XNum(i * eps - eps / 2),
                pow_rational(n, -(n - i)) - pow_rational(n, -(n - i + 1))});
  }
  return Instance::independent(std::move(actions), std::move(outside));
}

Instance gen_random(const RandomSpec& spec) {
  if (spec.n < 1 || spec.support_size < 1 || spec.profiles < 1 ||
      spec.value_den < 1 || spec.bias_den < 1 || spec.value_max < 0 ||
      spec.bias_max < 0) {
    throw SemanticError("invalid random instance parameters");
  }
  Draw d(spec.seed);
  OutsideMode mode = spec.outside;
  if (mode == OutsideMode::Any) mode = static_cast<OutsideMode>(d.uniform(0, 2));

  std::vector<Action> actions(static_cast<std::size_t>(spec.n));
  for (std::size_t i = 0; i < actions.size(); ++i) {
    actions[i].bias = random_bias(d, spec);
    actions[i].label = "r" + std::to_string(i + 1);
  }
  std::optional<Action> outside;
  if (mode != OutsideMode::None) {
    outside.emplace();
    outside->bias = random_bias(d, spec);
    outside->label = "outside";
  }

  if (spec.kind == Kind::Independent) {
    for (auto& a : actions) a.support = random_support(d, spec);
    if (outside) {
      if (mode == OutsideMode::Fixed) {
        outside->support = {Outcome{random_value(d, spec), 1}};
      } else {
        outside->support = random_support(d, spec);
      }
    }
    return Instance::independent(std::move(actions), std::move(outside));
  }

  if (mode == OutsideMode::Fixed) outside->support = {Outcome{random_value(d, spec), 1}};
  const auto probs = random_probs(d, spec.profiles);
  std::vector<Profile> profiles;
  for (const auto& p : probs) {
    Profile prof{p, {}};
    if (mode == OutsideMode::Random) prof.values.push_back(random_value(d, spec));
    for (int i = 0; i < spec.n; ++i) prof.values.push_back(random_value(d, spec));
    profiles.push_back(std::move(prof));
  }
  return Instance::correlated(std::move(actions), std::move(profiles), std::move(outside));
}

Instance from_assortment(const std::vector<Rational>& revenues,
                         const std::vector<DiscreteDistribution>& buyer_utils,
                         const std::optional<DiscreteDistribution>& outside_util,
                         const Rational& eps) {
  if (eps <= 0) throw SemanticError("assortment mapping needs eps > 0");
  if (revenues.size() != buyer_utils.size()) {
    throw SemanticError("one buyer utility distribution per item is required");
  }
  std::vector<Action> actions;
  for (std::size_t i = 0; i < revenues.size(); ++i) {
    const Rational& r = revenues[i];
    if (r < 0) {
      throw SemanticError("item " + std::to_string(i + 1) + ": negative revenue");
    }
    Action a;
    a.bias = XNum(-(1 + eps) * r);
    a.label = "item" + std::to_string(i + 1);
    for (const auto& o : buyer_utils[i].outcomes) {
      a.support.push_back(Outcome{XNum(r) + o.value * eps, o.prob});
    }
    actions.push_back(std::move(a));
  }
  std::optional<Action> outside;
  if (outside_util) {
    outside.emplace();
    outside->label = "no-buy";
    for (const auto& o : outside_util->outcomes) {
      outside->support.push_back(Outcome{o.value * eps, o.prob});
    }
  }
  return Instance::independent(std::move(actions), std::move(outside));
}

}  // namespace delegation
