#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delegation/xnum.hpp"

namespace delegation {

/// One point of a discrete value distribution.
struct Outcome {
  XNum value;
  Rational prob;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// An action the agent may take: a fixed bias and, for independent
/// instances, the marginal distribution of its value. Correlated instances
/// leave `support` empty and draw values from the instance profiles.
struct Action {
  XNum bias;
  std::vector<Outcome> support;
  std::string label;

  bool deterministic() const { return support.size() == 1; }

  friend bool operator==(const Action&, const Action&) = default;
};

/// A joint value realization of a correlated instance.
///
/// `values` holds one entry per action, optionally preceded by the outside
/// option's value (so `values[0]` is v_0 when the vector has n+1 entries).
/// A profile without an outside value uses the outside option's single
/// deterministic support point.
struct Profile {
  Rational prob;
  std::vector<XNum> values;

  friend bool operator==(const Profile&, const Profile&) = default;
};

enum class Kind { Independent, Correlated };

std::string_view to_string(Kind kind);

/// A delegation instance. Actions are numbered 1..n; index 0 is the outside
/// option, which exists only when `has_outside()` holds. An absent outside
/// option stands for b_0 = -inf.
///
/// Instances are validated on construction and immutable afterwards.
class Instance {
 public:
  static Instance independent(std::vector<Action> actions,
                              std::optional<Action> outside = std::nullopt);
  static Instance correlated(std::vector<Action> actions,
                             std::vector<Profile> profiles,
                             std::optional<Action> outside = std::nullopt);

  Kind kind() const { return kind_; }
  bool is_independent() const { return kind_ == Kind::Independent; }
  std::size_t size() const { return actions_.size(); }

  std::span<const Action> actions() const { return actions_; }
  /// 1-based; `action(0)` is the outside option.
  const Action& action(std::size_t index) const;
  const XNum& bias(std::size_t index) const { return action(index).bias; }

  bool has_outside() const { return outside_.has_value(); }
  const std::optional<Action>& outside() const { return outside_; }
  /// True when there is no outside option or its value is a single point.
  bool outside_fixed() const;

  std::span<const Profile> profiles() const { return profiles_; }

  /// Full value vector (index 0..n) for a correlated profile. Entry 0 is
  /// zero when there is no outside option.
  std::vector<XNum> profile_values(const Profile& profile) const;

  /// Largest value any action 1..n can take; the outside option is not
  /// counted.
  XNum max_action_value() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance() = default;
  void validate() const;

  Kind kind_ = Kind::Independent;
  std::vector<Action> actions_;
  std::optional<Action> outside_;
  std::vector<Profile> profiles_;
};

/// A subset of action indices offered to the agent. The outside option is
/// never stored; it is available whenever the instance has one.
class Menu {
 public:
  Menu() = default;
  Menu(std::initializer_list<std::size_t> indices);
  explicit Menu(std::vector<std::size_t> indices);

  static Menu all(std::size_t n);
  /// Menu from the low `n` bits of `mask`; bit k selects action k+1.
  static Menu from_mask(unsigned long long mask, std::size_t n);

  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  bool contains(std::size_t index) const;
  std::span<const std::size_t> indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  friend bool operator==(const Menu&, const Menu&) = default;
  /// Smaller menus first, then lexicographic on sorted indices.
  friend std::strong_ordering operator<=>(const Menu& a, const Menu& b);

 private:
  std::vector<std::size_t> indices_;
};

std::string to_string(const Menu& menu);

/// Throws SemanticError when an index is out of range, or when the menu is
/// empty and the instance has no outside option.
void check_menu(const Instance& instance, const Menu& menu);

/// A = {i | b_i <= t}.
Menu threshold_menu(const Instance& instance, const XNum& t);

/// Returns a copy with `c` added to every bias, the outside option's
/// included.
Instance shift_biases(const Instance& instance, const XNum& c);

}  // namespace delegation
