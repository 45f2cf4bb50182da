#pragma once

#include <string>
#include <vector>

#include "delegation/solve.hpp"

namespace delegation {

/// Outcome of one executable lemma check on one (instance, menu) pair.
struct LemmaCheck {
  std::string name;
  std::string menu;
  bool ok = false;
  std::string detail;
};

/// Sur + BDif = f(A).
LemmaCheck check_decomposition(const Instance& instance, const Menu& menu);

/// f(A_u) >= Sur for u = max bias over A ∪ {0}.
LemmaCheck check_threshold_dominance(const Instance& instance,
                                     const Menu& menu);

/// f(A_{b_i}) >= contribution of i to f(A), for every i in A ∪ {0}.
LemmaCheck check_single_action(const Instance& instance, const Menu& menu);

/// derandomize_interference is certified for every threshold menu.
/// Independent instances only.
std::vector<LemmaCheck> check_derandomization(const Instance& instance,
                                              const Menu& opt_menu);

/// All of the above for the given menus (derandomization against
/// `opt_menu`, skipped for correlated instances).
std::vector<LemmaCheck> verify_lemmas(const Instance& instance,
                                      const Menu& opt_menu,
                                      const std::vector<Menu>& menus);

}  // namespace delegation
