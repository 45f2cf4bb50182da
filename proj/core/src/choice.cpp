#include "delegation/choice.hpp"

#include <optional>

#include "delegation/error.hpp"

namespace delegation {

bool prefers(const Candidate& a, const Candidate& b) {
  if (auto c = a.agent_utility() <=> b.agent_utility(); c != 0) return c > 0;
  if (auto c = a.value <=> b.value; c != 0) return c > 0;
  if ((a.index == 0) != (b.index == 0)) return b.index == 0;
  return a.index < b.index;
}

std::size_t agent_choice(const Instance& instance, const Menu& menu,
                         std::span<const XNum> values) {
  check_menu(instance, menu);
  if (values.size() != instance.size() + 1) {
    throw SemanticError("value vector has " + std::to_string(values.size()) +
                        " entries, expected " + std::to_string(instance.size() + 1));
  }
  std::optional<Candidate> best;
  if (instance.has_outside()) {
    best = Candidate{0, values[0], instance.bias(0)};
  }
  for (std::size_t i : menu) {
    Candidate c{i, values[i], instance.bias(i)};
    if (!best || prefers(c, *best)) best = std::move(c);
  }
  return best->index;
}

}  // namespace delegation
