#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "delegation/instance.hpp"

namespace delegation {

inline constexpr std::size_t kDefaultProfileCap = 1'000'000;

/// Expected principal utility of a menu, broken down by the chosen action.
struct EvalReport {
  XNum f;
  /// Index -> E[v_i · 1{agent picks i}]; index 0 is the outside option.
  std::map<std::size_t, XNum> contrib;
  /// Index -> Pr[agent picks i].
  std::map<std::size_t, Rational> freq;
};

/// Exhaustive enumeration over the explicit profiles of a correlated
/// instance.
EvalReport eval_correlated(const Instance& instance, const Menu& menu);

/// Exact evaluation for product distributions.
///
/// Runs over the outside option and then the menu in increasing index,
/// keeping a distribution over the current winner (index, realized value).
/// A new realization takes over iff the agent strictly prefers it, so the
/// final distribution is the distribution of agent_choice. States with the
/// same winner are merged, which bounds the state count by the number of
/// (action, realization) pairs.
EvalReport eval_independent_dp(const Instance& instance, const Menu& menu);

/// Reference evaluator: expands the joint support of the menu and the
/// outside option into explicit profiles. Throws CapExceeded when that
/// support is larger than `cap`.
EvalReport eval_bruteforce_product(const Instance& instance, const Menu& menu,
                                   std::size_t cap = kDefaultProfileCap);

/// Dispatches on the instance kind (DP for independent instances).
EvalReport evaluate(const Instance& instance, const Menu& menu);

/// f(A) = Sur + BDif with respect to u = max{b_i | i in A ∪ {0}}.
struct Decomposition {
  XNum u_low;
  XNum sur;
  XNum bdif;
};

Decomposition decompose(const Instance& instance, const Menu& menu);

/// Result of collapsing the non-optimal part of a threshold menu into one
/// deterministic action with bias t.
struct Derandomization {
  Menu threshold;   // A_t
  Menu kept;        // A_t ∩ A*
  Menu interfering; // A_t \ A*
  /// The substitute action a(t); absent when nothing interferes.
  std::optional<Action> action;
  /// Index of the original interfering action a(t) stands in for.
  std::size_t source_index = 0;
  XNum f_threshold;     // f(A_t)
  XNum f_derandomized;  // f(A_t ∩ A* ∪ {a(t)})
  bool certified = false;
};

/// Builds a(t) for an independent instance by enumerating joint
/// realizations of A_t \ A* and keeping the one that minimizes the
/// principal's conditional utility (first in enumeration order on ties).
/// The value of a(t) may be negative.
Derandomization derandomize_interference(const Instance& instance,
                                         const Menu& opt_menu, const XNum& t,
                                         std::size_t cap = kDefaultProfileCap);

}  // namespace delegation
