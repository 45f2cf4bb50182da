#include "delegation/instance.hpp"

#include <algorithm>
#include <sstream>

#include "delegation/error.hpp"

namespace delegation {

namespace {

std::string action_name(std::size_t index) {
  return index == 0 ? std::string("outside option")
                    : "action " + std::to_string(index);
}

void check_support(const Action& a, std::size_t index) {
  if (a.support.empty()) {
    throw SemanticError(action_name(index) + ": empty support");
  }
  Rational total = 0;
  for (const auto& o : a.support) {
    if (o.prob <= 0) {
      throw SemanticError(action_name(index) + ": non-positive probability " +
                          to_string(o.prob));
    }
    if (o.value.std_part() < 0) {
      throw SemanticError(action_name(index) + ": negative value " +
                          to_string(o.value));
    }
    total += o.prob;
  }
  if (total != 1) {
    throw SemanticError(action_name(index) + ": probabilities sum to " +
                        to_string(total));
  }
}

}  // namespace

std::string_view to_string(Kind kind) {
  return kind == Kind::Independent ? "independent" : "correlated";
}

Instance Instance::independent(std::vector<Action> actions,
                               std::optional<Action> outside) {
  Instance inst;
  inst.kind_ = Kind::Independent;
  inst.actions_ = std::move(actions);
  inst.outside_ = std::move(outside);
  inst.validate();
  return inst;
}

Instance Instance::correlated(std::vector<Action> actions,
                              std::vector<Profile> profiles,
                              std::optional<Action> outside) {
  Instance inst;
  inst.kind_ = Kind::Correlated;
  inst.actions_ = std::move(actions);
  inst.profiles_ = std::move(profiles);
  inst.outside_ = std::move(outside);
  inst.validate();
  return inst;
}

void Instance::validate() const {
  if (kind_ == Kind::Independent) {
    if (!profiles_.empty()) {
      throw SemanticError("independent instance must not list profiles");
    }
    for (std::size_t i = 0; i < actions_.size(); ++i) {
      check_support(actions_[i], i + 1);
    }
    if (outside_) check_support(*outside_, 0);
    return;
  }

  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (!actions_[i].support.empty()) {
      throw SemanticError(action_name(i + 1) +
                          ": correlated actions take values from profiles");
    }
  }
  if (outside_ && !outside_->support.empty()) check_support(*outside_, 0);
  if (profiles_.empty()) throw SemanticError("correlated instance has no profiles");
  Rational total = 0;
  const std::size_t n = actions_.size();
  for (std::size_t s = 0; s < profiles_.size(); ++s) {
    const Profile& p = profiles_[s];
    const std::string where = "profile " + std::to_string(s + 1);
    if (p.prob <= 0) throw SemanticError(where + ": non-positive probability");
    total += p.prob;
    if (p.values.size() == n + 1) {
      if (!outside_) {
        throw SemanticError(where + ": outside value given without an outside option");
      }
    } else if (p.values.size() == n) {
      if (outside_ && !outside_->deterministic()) {
        throw SemanticError(where +
                            ": outside option needs a value in every profile "
                            "unless it is deterministic");
      }
    } else {
      throw SemanticError(where + ": expected " + std::to_string(n) +
                          " values, got " + std::to_string(p.values.size()));
    }
    for (const auto& v : p.values) {
      if (v.std_part() < 0) {
        throw SemanticError(where + ": negative value " + to_string(v));
      }
    }
  }
  if (total != 1) {
    throw SemanticError("profile probabilities sum to " + to_string(total));
  }
}

const Action& Instance::action(std::size_t index) const {
  if (index == 0) {
    if (!outside_) throw SemanticError("instance has no outside option");
    return *outside_;
  }
  if (index > actions_.size()) {
    throw SemanticError("action index " + std::to_string(index) +
                        " out of range 1.." + std::to_string(actions_.size()));
  }
  return actions_[index - 1];
}

bool Instance::outside_fixed() const {
  if (!outside_) return true;
  if (kind_ == Kind::Correlated) {
    if (profiles_.empty() || profiles_.front().values.size() == actions_.size()) {
      return true;
    }
    const XNum& first = profiles_.front().values.front();
    return std::all_of(profiles_.begin(), profiles_.end(),
                       [&](const Profile& p) { return p.values.front() == first; });
  }
  return outside_->deterministic();
}

std::vector<XNum> Instance::profile_values(const Profile& profile) const {
  std::vector<XNum> values;
  values.reserve(actions_.size() + 1);
  if (profile.values.size() == actions_.size()) {
    values.push_back(outside_ && !outside_->support.empty()
                         ? outside_->support.front().value
                         : XNum());
    values.insert(values.end(), profile.values.begin(), profile.values.end());
  } else {
    values = profile.values;
  }
  return values;
}

XNum Instance::max_action_value() const {
  XNum best;
  if (kind_ == Kind::Independent) {
    for (const auto& a : actions_) {
      for (const auto& o : a.support) best = std::max(best, o.value);
    }
    return best;
  }
  for (const auto& p : profiles_) {
    const std::size_t first = p.values.size() == actions_.size() ? 0 : 1;
    for (std::size_t k = first; k < p.values.size(); ++k) {
      best = std::max(best, p.values[k]);
    }
  }
  return best;
}

Menu::Menu(std::initializer_list<std::size_t> indices)
    : Menu(std::vector<std::size_t>(indices)) {}

Menu::Menu(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

Menu Menu::all(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i + 1;
  return Menu(std::move(idx));
}

Menu Menu::from_mask(unsigned long long mask, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1ULL) idx.push_back(i + 1);
  }
  return Menu(std::move(idx));
}

bool Menu::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::strong_ordering operator<=>(const Menu& a, const Menu& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.indices_.begin(), a.indices_.end(),
                                                b.indices_.begin(), b.indices_.end());
}

std::string to_string(const Menu& menu) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i : menu) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

void check_menu(const Instance& instance, const Menu& menu) {
  for (std::size_t i : menu) {
    if (i == 0 || i > instance.size()) {
      throw SemanticError("menu index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(instance.size()));
    }
  }
  if (menu.empty() && !instance.has_outside()) {
    throw SemanticError("no feasible action");
  }
}

Menu threshold_menu(const Instance& instance, const XNum& t) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i <= instance.size(); ++i) {
    if (instance.bias(i) <= t) idx.push_back(i);
  }
  return Menu(std::move(idx));
}

Instance shift_biases(const Instance& instance, const XNum& c) {
  std::vector<Action> actions(instance.actions().begin(), instance.actions().end());
  for (auto& a : actions) a.bias += c;
  std::optional<Action> outside = instance.outside();
  if (outside) outside->bias += c;
  if (instance.is_independent()) {
    return Instance::independent(std::move(actions), std::move(outside));
  }
  return Instance::correlated(
      std::move(actions),
      std::vector<Profile>(instance.profiles().begin(), instance.profiles().end()),
      std::move(outside));
}

}  // namespace delegation
