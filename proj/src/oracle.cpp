#include "fairdsg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace fairdsg {

namespace {

// For two masks of equal popcount, the one holding the lowest differing bit
// has the lexicographically smaller sorted member sequence.
bool lexicographically_smaller(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

}  // namespace

OracleResult brute_force_densest(const LabeledGraph& g, const Coloring& c,
                                 OracleConstraint constraint) {
  const std::size_t n = g.num_nodes();
  if (n > kOracleMaxNodes) throw Error("instance too large for oracle");
  if (c.size() != n) throw Error("coloring does not match graph size");
  if (constraint.kind == OracleConstraint::Kind::AtMostK && constraint.k < 1) {
    throw Error("at-most-k constraint needs k >= 1");
  }

  std::uint32_t red_mask = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (c[static_cast<NodeId>(u)] == Color::Red) red_mask |= 1u << u;
  }

  // into[u]: weight from u to the current set. Updated per toggle, so the
  // walk costs O(deg) per subset.
  std::vector<double> into(n, 0.0);
  double weight = 0.0;
  std::uint32_t mask = 0;

  bool found = false;
  std::uint32_t best_mask = 0;
  double best_weight = 0.0;
  int best_size = 0;

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto bit = static_cast<NodeId>(std::countr_zero(i));
    const std::uint32_t flag = 1u << bit;
    if (mask & flag) {
      mask &= ~flag;
      for (const Neighbor& nb : g.neighbors(bit)) into[nb.node] -= nb.weight;
      weight -= into[bit];
    } else {
      weight += into[bit];
      mask |= flag;
      for (const Neighbor& nb : g.neighbors(bit)) into[nb.node] += nb.weight;
    }

    const int size = std::popcount(mask);
    switch (constraint.kind) {
      case OracleConstraint::Kind::Unconstrained: break;
      case OracleConstraint::Kind::Fair:
        if (2 * std::popcount(mask & red_mask) != size) continue;
        break;
      case OracleConstraint::Kind::AtMostK:
        if (static_cast<std::size_t>(size) > constraint.k) continue;
        break;
    }

    bool better = !found;
    if (found) {
      const double lhs = weight * best_size;
      const double rhs = best_weight * size;
      const double tol = 1e-12 * std::max({std::abs(lhs), std::abs(rhs), 1.0});
      if (lhs > rhs + tol) {
        better = true;
      } else if (std::abs(lhs - rhs) <= tol) {
        better = size < best_size || (size == best_size && lexicographically_smaller(mask, best_mask));
      }
    }
    if (better) {
      found = true;
      best_mask = mask;
      best_weight = weight;
      best_size = size;
    }
  }

  OracleResult result;
  if (!found) return result;
  std::vector<NodeId> members;
  for (std::size_t u = 0; u < n; ++u) {
    if (best_mask & (1u << u)) members.push_back(static_cast<NodeId>(u));
  }
  result.nodes = NodeSet(std::move(members));
  result.density = density(g, result.nodes);
  result.feasible = true;
  return result;
}

}  // namespace fairdsg
