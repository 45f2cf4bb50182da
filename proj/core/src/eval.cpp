#include "delegation/eval.hpp"

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "delegation/choice.hpp"
#include "delegation/error.hpp"

namespace delegation {

namespace {

constexpr std::size_t kNoWinner = std::numeric_limits<std::size_t>::max();

/// One independent random candidate fed to the winner DP.
struct Column {
  std::size_t index;
  XNum bias;
  std::span<const Outcome> support;
};

struct WinnerState {
  XNum bias;
  Rational prob;
};

using WinnerKey = std::pair<std::size_t, XNum>;  // (index, realized value)

EvalReport empty_report(const Instance& instance, const Menu& menu) {
  EvalReport r;
  if (instance.has_outside()) {
    r.contrib[0] = XNum();
    r.freq[0] = 0;
  }
  for (std::size_t i : menu) {
    r.contrib[i] = XNum();
    r.freq[i] = 0;
  }
  return r;
}

void add_mass(EvalReport& r, std::size_t index, const XNum& value,
              const Rational& prob) {
  const XNum mass = value * prob;
  r.f += mass;
  r.contrib[index] += mass;
  r.freq[index] += prob;
}

std::map<WinnerKey, WinnerState> run_winner_dp(const std::optional<Column>& outside,
                                               std::span<const Column> columns) {
  std::map<WinnerKey, WinnerState> states;
  if (outside) {
    for (const auto& o : outside->support) {
      auto& s = states[{0, o.value}];
      s.bias = outside->bias;
      s.prob += o.prob;
    }
  } else {
    states[{kNoWinner, XNum()}] = WinnerState{XNum(), 1};
  }

  for (const Column& col : columns) {
    std::map<WinnerKey, WinnerState> next;
    for (const auto& [key, state] : states) {
      const Candidate incumbent{key.first, key.second, state.bias};
      for (const auto& o : col.support) {
        const Candidate challenger{col.index, o.value, col.bias};
        const Rational p = state.prob * o.prob;
        if (key.first == kNoWinner || prefers(challenger, incumbent)) {
          auto& s = next[{col.index, o.value}];
          s.bias = col.bias;
          s.prob += p;
        } else {
          auto& s = next[key];
          s.bias = state.bias;
          s.prob += p;
        }
      }
    }
    states = std::move(next);
  }
  return states;
}

std::optional<Column> outside_column(const Instance& instance) {
  if (!instance.has_outside()) return std::nullopt;
  return Column{0, instance.bias(0), instance.action(0).support};
}

std::vector<Column> menu_columns(const Instance& instance, const Menu& menu) {
  std::vector<Column> cols;
  cols.reserve(menu.size());
  for (std::size_t i : menu) {
    cols.push_back(Column{i, instance.bias(i), instance.action(i).support});
  }
  return cols;
}

XNum winner_dp_value(const std::optional<Column>& outside,
                     std::span<const Column> columns) {
  XNum f;
  for (const auto& [key, state] : run_winner_dp(outside, columns)) {
    f += key.second * state.prob;
  }
  return f;
}

void require_independent(const Instance& instance, const char* op) {
  if (!instance.is_independent()) {
    throw SemanticError(std::string(op) + " requires an independent instance");
  }
}

/// Product of support sizes, saturating at max()+1 semantics via a flag.
std::size_t joint_count(std::span<const std::size_t> sizes, std::size_t cap,
                        bool& exceeded) {
  std::size_t total = 1;
  exceeded = false;
  for (std::size_t s : sizes) {
    if (s != 0 && total > cap / s) {
      exceeded = true;
      return 0;
    }
    total *= s;
  }
  exceeded = total > cap;
  return total;
}

std::string describe_count(std::span<const std::size_t> sizes) {
  mpz_class total = 1;
  for (std::size_t s : sizes) total *= static_cast<unsigned long>(s);
  return total.get_str();
}

}  // namespace

EvalReport eval_correlated(const Instance& instance, const Menu& menu) {
  if (instance.is_independent()) {
    throw SemanticError("eval_correlated requires a correlated instance");
  }
  check_menu(instance, menu);
  EvalReport r = empty_report(instance, menu);
  for (const Profile& p : instance.profiles()) {
    const auto values = instance.profile_values(p);
    const std::size_t g = agent_choice(instance, menu, values);
    add_mass(r, g, values[g], p.prob);
  }
  return r;
}

EvalReport eval_independent_dp(const Instance& instance, const Menu& menu) {
  require_independent(instance, "eval_independent_dp");
  check_menu(instance, menu);
  EvalReport r = empty_report(instance, menu);
  const auto cols = menu_columns(instance, menu);
  for (const auto& [key, state] : run_winner_dp(outside_column(instance), cols)) {
    add_mass(r, key.first, key.second, state.prob);
  }
  return r;
}

EvalReport eval_bruteforce_product(const Instance& instance, const Menu& menu,
                                   std::size_t cap) {
  require_independent(instance, "eval_bruteforce_product");
  check_menu(instance, menu);

  std::vector<std::size_t> slots;  // indices whose values vary
  if (instance.has_outside()) slots.push_back(0);
  slots.insert(slots.end(), menu.begin(), menu.end());
  std::vector<std::size_t> sizes;
  for (std::size_t i : slots) sizes.push_back(instance.action(i).support.size());
  bool exceeded = false;
  joint_count(sizes, cap, exceeded);
  if (exceeded) {
    throw CapExceeded("joint support has " + describe_count(sizes) +
                      " profiles, cap is " + std::to_string(cap));
  }

  EvalReport r = empty_report(instance, menu);
  std::vector<std::size_t> pos(slots.size(), 0);
  std::vector<XNum> values(instance.size() + 1);
  while (true) {
    Rational prob = 1;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const Outcome& o = instance.action(slots[k]).support[pos[k]];
      values[slots[k]] = o.value;
      prob *= o.prob;
    }
    const std::size_t g = agent_choice(instance, menu, values);
    add_mass(r, g, values[g], prob);

    std::size_t k = 0;
    for (; k < slots.size(); ++k) {
      if (++pos[k] < sizes[k]) break;
      pos[k] = 0;
    }
    if (k == slots.size()) break;
  }
  return r;
}

EvalReport evaluate(const Instance& instance, const Menu& menu) {
  return instance.is_independent() ? eval_independent_dp(instance, menu)
                                   : eval_correlated(instance, menu);
}

Decomposition decompose(const Instance& instance, const Menu& menu) {
  check_menu(instance, menu);
  std::optional<XNum> u;
  if (instance.has_outside()) u = instance.bias(0);
  for (std::size_t i : menu) {
    if (!u || instance.bias(i) > *u) u = instance.bias(i);
  }
  const EvalReport r = evaluate(instance, menu);
  Decomposition d;
  d.u_low = *u;
  for (const auto& [i, p] : r.freq) d.bdif += (d.u_low - instance.bias(i)) * p;
  d.sur = r.f - d.bdif;
  return d;
}

Derandomization derandomize_interference(const Instance& instance,
                                         const Menu& opt_menu, const XNum& t,
                                         std::size_t cap) {
  require_independent(instance, "derandomize_interference");
  check_menu(instance, opt_menu);

  Derandomization out;
  out.threshold = threshold_menu(instance, t);
  std::vector<std::size_t> kept, interfering;
  for (std::size_t i : out.threshold) {
    (opt_menu.contains(i) ? kept : interfering).push_back(i);
  }
  out.kept = Menu(kept);
  out.interfering = Menu(interfering);
  out.f_threshold = eval_independent_dp(instance, out.threshold).f;

  if (interfering.empty()) {
    out.f_derandomized = out.f_threshold;
    out.certified = true;
    return out;
  }

  std::vector<std::size_t> sizes;
  for (std::size_t i : interfering) sizes.push_back(instance.action(i).support.size());
  bool exceeded = false;
  joint_count(sizes, cap, exceeded);
  if (exceeded) {
    throw CapExceeded("interfering joint support has " + describe_count(sizes) +
                      " realizations, cap is " + std::to_string(cap));
  }

  const auto outside = outside_column(instance);
  const auto kept_cols = menu_columns(instance, out.kept);
  auto utility_with = [&](std::size_t index, const XNum& bias,
                          std::span<const Outcome> single) {
    std::vector<Column> cols = kept_cols;
    cols.push_back(Column{index, bias, single});
    return winner_dp_value(outside, cols);
  };

  // The conditional utility only depends on the agent's favourite among the
  // fixed interfering values, so cache on it.
  std::map<WinnerKey, XNum> cache;
  std::optional<XNum> worst;
  Candidate worst_pick{0, XNum(), XNum()};
  std::vector<std::size_t> pos(interfering.size(), 0);
  while (true) {
    std::optional<Candidate> pick;
    for (std::size_t k = 0; k < interfering.size(); ++k) {
      const std::size_t i = interfering[k];
      Candidate c{i, instance.action(i).support[pos[k]].value, instance.bias(i)};
      if (!pick || prefers(c, *pick)) pick = std::move(c);
    }
    const WinnerKey key{pick->index, pick->value};
    auto it = cache.find(key);
    if (it == cache.end()) {
      const Outcome single{pick->value, 1};
      it = cache.emplace(key, utility_with(pick->index, pick->bias, {&single, 1})).first;
    }
    if (!worst || it->second < *worst) {
      worst = it->second;
      worst_pick = *pick;
    }

    std::size_t k = 0;
    for (; k < interfering.size(); ++k) {
      if (++pos[k] < sizes[k]) break;
      pos[k] = 0;
    }
    if (k == interfering.size()) break;
  }

  // Re-bias to t while keeping the agent's utility for the collapsed action.
  const XNum value = worst_pick.value - (t - worst_pick.bias);
  Action a;
  a.bias = t;
  a.support = {Outcome{value, 1}};
  a.label = "a(t)";
  out.source_index = worst_pick.index;
  out.f_derandomized = utility_with(worst_pick.index, t, a.support);
  out.action = std::move(a);
  out.certified = out.f_threshold >= out.f_derandomized;
  return out;
}

}  // namespace delegation
