#pragma once

#include <cstddef>
#include <span>

#include "delegation/instance.hpp"

namespace delegation {

/// A feasible option as the agent sees it.
struct Candidate {
  std::size_t index;  // 0 = outside option
  XNum value;
  XNum bias;

  XNum agent_utility() const { return value + bias; }
};

/// Strict preference of the agent: higher agent utility, then higher
/// principal value, then any menu action over the outside option, then the
/// lower index. Total on candidates with distinct indices.
bool prefers(const Candidate& a, const Candidate& b);

/// The agent's choice from `menu` plus the outside option, given one value
/// per index 0..n (`values[0]` is ignored without an outside option).
/// Throws SemanticError("no feasible action") if nothing is available.
std::size_t agent_choice(const Instance& instance, const Menu& menu,
                         std::span<const XNum> values);

}  // namespace delegation
