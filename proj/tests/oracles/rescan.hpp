#pragma once

// Sweep reference: rebuilds every prefix from scratch on a dense matrix.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "jacobi.hpp"

namespace oracle {

struct SweepChoice {
  bool found = false;
  std::vector<fairdsg::NodeId> nodes;  // sorted
  double weight = 0.0;
};

inline double key_of(double x, int ordering) { return ordering >= 2 ? std::abs(x) : x; }

// Ordering 0/2 descending, 1/3 ascending; 2/3 on absolute values. Ties by id.
inline std::vector<fairdsg::NodeId> order_nodes(const std::vector<double>& v, int ordering,
                                                std::vector<fairdsg::NodeId> ids) {
  const bool descending = ordering == 0 || ordering == 2;
  std::sort(ids.begin(), ids.end(), [&](fairdsg::NodeId a, fairdsg::NodeId b) {
    const double ka = key_of(v[a], ordering);
    const double kb = key_of(v[b], ordering);
    if (ka != kb) return descending ? ka > kb : ka < kb;
    return a < b;
  });
  return ids;
}

inline double set_weight(const Matrix& a, const std::vector<fairdsg::NodeId>& s) {
  double w = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) w += a[s[i]][s[j]];
  }
  return w;
}

inline void offer(SweepChoice& best, std::vector<fairdsg::NodeId> s, double w) {
  bool take = !best.found;
  if (!take) {
    const double lhs = w * static_cast<double>(best.nodes.size());
    const double rhs = best.weight * static_cast<double>(s.size());
    take = lhs > rhs || (lhs == rhs && s.size() < best.nodes.size());
  }
  if (take) {
    std::sort(s.begin(), s.end());
    best = {true, std::move(s), w};
  }
}

inline SweepChoice rescan_general(const fairdsg::LabeledGraph& g, const fairdsg::Coloring& c,
                                  const std::vector<double>& v, double delta) {
  const Matrix a = dense_adjacency(g);
  std::vector<fairdsg::NodeId> ids(g.num_nodes());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<fairdsg::NodeId>(i);
  SweepChoice best;
  for (int k = 0; k < 4; ++k) {
    const auto order = order_nodes(v, k, ids);
    for (std::size_t s = 1; s <= order.size(); ++s) {
      std::vector<fairdsg::NodeId> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(s));
      std::int64_t diff = 0;
      for (fairdsg::NodeId u : prefix) diff += c[u] == fairdsg::Color::Red ? 1 : -1;
      if (static_cast<double>(std::llabs(diff)) > delta * static_cast<double>(s)) continue;
      offer(best, prefix, set_weight(a, prefix));
    }
  }
  return best;
}

inline SweepChoice rescan_paired(const fairdsg::LabeledGraph& g, const fairdsg::Coloring& c,
                                 const std::vector<double>& v) {
  const Matrix a = dense_adjacency(g);
  std::vector<fairdsg::NodeId> reds, blues;
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    (c[static_cast<fairdsg::NodeId>(i)] == fairdsg::Color::Red ? reds : blues)
        .push_back(static_cast<fairdsg::NodeId>(i));
  }
  SweepChoice best;
  for (int k = 0; k < 4; ++k) {
    const auto r = order_nodes(v, k, reds);
    const auto b = order_nodes(v, k, blues);
    for (std::size_t s = 1; s <= std::min(r.size(), b.size()); ++s) {
      std::vector<fairdsg::NodeId> set(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(s));
      set.insert(set.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(s));
      offer(best, set, set_weight(a, set));
    }
  }
  return best;
}

}  // namespace oracle
