#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trigroup/core.hpp"

namespace trigroup {

struct ReductionStep {
  GeneratorIndex generator;
  Quadruple after;
};

/// Sum-reducing path from a quadruple down to its root.
struct ReductionTrace {
  Quadruple start;
  std::vector<ReductionStep> steps;
  Quadruple root;

  std::size_t length() const { return steps.size(); }
};

/// True iff no generator strictly decreases the entry sum.
bool is_root(const Quadruple& q);

/// Applies the generator at the largest entry (lowest position on ties) if it
/// strictly reduces the sum; nothing when q is already a root.
std::optional<std::pair<Quadruple, GeneratorIndex>> reduce_step(const Quadruple& q);

ReductionTrace reduce_to_root(const Quadruple& q);

/// gcd of the four entries.
Integer gcd_content(const Quadruple& q);

bool is_primitive(const Quadruple& q);

/// Orbit membership up to entry permutation: equal gcd content.
bool same_orbit(const Quadruple& q1, const Quadruple& q2);

/// Orbit membership for the ordered tuples under the group action itself:
/// both reduce to the same ordered root.
bool same_ordered_orbit(const Quadruple& q1, const Quadruple& q2);

/// Replays the trace's generators backwards from the root.
Quadruple replay_from_root(const ReductionTrace& trace);

}  // namespace trigroup
