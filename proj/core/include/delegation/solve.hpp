#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "delegation/eval.hpp"

namespace delegation {

struct SolveOptions {
  std::size_t cap_n = 20;
  unsigned jobs = 1;
};

struct MenuValue {
  Menu menu;
  XNum value;
};

/// Optimal menu over all 2^n subsets (the empty menu only with an outside
/// option). Ties go to the smaller menu, then the lexicographically smaller
/// one. Throws CapExceeded when n > options.cap_n.
MenuValue brute_force_opt(const Instance& instance,
                          const SolveOptions& options = {});

/// A threshold menu A_t. `t` is empty for the empty menu, which is listed
/// only when an outside option exists.
struct ThresholdMenu {
  std::optional<XNum> t;
  Menu menu;
};

/// One entry per distinct action bias, sorted by increasing t, preceded by
/// the empty menu when the instance has an outside option.
std::vector<ThresholdMenu> threshold_menus(const Instance& instance);

struct ThresholdChoice {
  std::optional<XNum> t;
  Menu menu;
  XNum value;
};

/// Best threshold menu; ties go to the smaller t.
ThresholdChoice best_threshold(const Instance& instance);

struct SolveResult {
  Menu opt_menu;
  XNum opt_value;
  std::optional<XNum> best_threshold;
  Menu best_threshold_menu;
  XNum best_threshold_value;
  /// opt.std / best.std, when best.std > 0.
  std::optional<Rational> ratio;
};

SolveResult solve(const Instance& instance, const SolveOptions& options = {});

/// Approximation guarantees checked against a solve result. A flag is the
/// truth value of "applicable => inequality holds", so an inapplicable
/// bound reads true.
struct BoundReport {
  /// v_max.std / opt.std; absent when opt.std = 0.
  std::optional<Rational> rho;
  /// Smallest probability of a joint value profile.
  Rational p_min;
  bool applies_3 = false;    // independent, fixed or absent outside option
  bool applies_n = false;    // independent
  bool applies_log = false;  // correlated
  bool bound_3 = true;       // best >= opt/3
  bool bound_n = true;       // best >= opt/n
  bool bound_log = true;     // best >= opt / (4·max(1, log2(1/p_min)))
  /// opt.std = 0: every bound holds trivially.
  bool vacuous = false;

  bool all_hold() const { return bound_3 && bound_n && bound_log; }
};

BoundReport bound_report(const Instance& instance, const SolveResult& result);

/// Smallest probability mass of any joint value profile. For independent
/// instances this is the product of each action's (and the outside
/// option's) least likely outcome.
Rational min_profile_mass(const Instance& instance);

/// Exact test of log2(x) >= y for rational x > 0.
bool log2_at_least(const Rational& x, const Rational& y);

}  // namespace delegation
