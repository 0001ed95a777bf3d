#pragma once

#include <cstddef>

#include "fairdsg/graph.hpp"

namespace fairdsg {

struct OracleConstraint {
  enum class Kind { Unconstrained, Fair, AtMostK };

  Kind kind = Kind::Unconstrained;
  std::size_t k = 0;  // only for AtMostK, >= 1

  static OracleConstraint unconstrained() { return {Kind::Unconstrained, 0}; }
  static OracleConstraint fair() { return {Kind::Fair, 0}; }
  static OracleConstraint at_most(std::size_t k) { return {Kind::AtMostK, k}; }
};

struct OracleResult {
  NodeSet nodes;
  double density = 0.0;
  bool feasible = false;  // false when no non-empty set meets the constraint
};

inline constexpr std::size_t kOracleMaxNodes = 20;

/// Exhaustive search over all 2^n subsets in Gray-code order. Ties go to the
/// smaller set, then to the lexicographically smallest member sequence.
/// Throws Error("instance too large for oracle") above kOracleMaxNodes.
OracleResult brute_force_densest(const LabeledGraph& g, const Coloring& c,
                                 OracleConstraint constraint);

}  // namespace fairdsg
