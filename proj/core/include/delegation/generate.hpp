#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "delegation/instance.hpp"

namespace delegation {

/// Logarithmic lower-bound family for correlated values: n = 2k-1 actions,
/// 2^k - 1 equally likely profiles. Odd actions alone are optimal; every
/// threshold menu loses a factor of about k/2. ε is ι. Requires 2 <= k <= 16.
Instance gen_log_family(int k);

/// Five-action independent instance on which the best threshold approaches
/// a third of the optimum as eps -> 0. δ is ι; there is no outside option.
/// Requires 0 < eps < 1.
Instance gen_three_approx(const Rational& eps);

struct OutsideFamilyOptions {
  /// Finite ε of the construction; defaults to 1/n^(2n).
  std::optional<Rational> eps;
  /// Low realization of good actions is n^(n-i) - ε instead of 0.
  bool alternative_low = false;
};

/// Independent family with a random outside option on which every
/// threshold menu loses an Ω(n) factor. Actions are ordered
/// g(1), b(2), g(2), ..., b(n), g(n). Requires 2 <= n <= 6.
Instance gen_outside_family(int n, const OutsideFamilyOptions& options = {});

enum class OutsideMode { None, Fixed, Random, Any };

/// Seeded random instance on a bounded rational grid.
///
/// Values are k/value_den for k in [0, value_max·value_den] with an ι
/// coefficient in {0, 1, 2}; biases are k/bias_den in [-bias_max, bias_max]
/// with ι coefficient in {-1, 0, 1}. Probabilities are integer weights in
/// [1, 6] normalized to one. Correlated instances draw `profiles` explicit
/// profiles; an outside option in Random mode gets its own random value per
/// profile. `Any` picks one of the other modes per instance.
struct RandomSpec {
  Kind kind = Kind::Independent;
  int n = 3;
  int support_size = 2;
  int profiles = 4;
  std::uint64_t seed = 0;
  int value_max = 4;
  int value_den = 2;
  int bias_max = 3;
  int bias_den = 2;
  OutsideMode outside = OutsideMode::Any;
};

Instance gen_random(const RandomSpec& spec);

struct DiscreteDistribution {
  std::vector<Outcome> outcomes;
};

/// Utility-based assortment optimization as delegation: item i has value
/// r_i + eps·w_i and bias -(1+eps)·r_i. The outside option (no-buy or
/// buy-elsewhere) has revenue 0, so its value is eps·w_0 and its bias 0;
/// no-buy is w_0 = 0. Throws SemanticError on a negative revenue or
/// eps <= 0.

Instance from_assortment(const std::vector<Rational>& revenues,
                         const std::vector<DiscreteDistribution>& buyer_utils,
                         const std::optional<DiscreteDistribution>& outside_util,
                         const Rational& eps);

}  // namespace delegation
