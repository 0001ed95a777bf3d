#pragma once

// Minimum s-t cut by enumerating every source side.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

struct Arc {
  std::size_t from;
  std::size_t to;
  double cap;
};

inline double min_cut_by_enumeration(std::size_t nodes, std::size_t source, std::size_t sink,
                                     const std::vector<Arc>& arcs) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << nodes); ++mask) {
    if (!(mask >> source & 1u) || (mask >> sink & 1u)) continue;
    double cut = 0.0;
    for (const Arc& a : arcs) {
      if ((mask >> a.from & 1u) && !(mask >> a.to & 1u)) cut += a.cap;
    }
    if (cut < best) best = cut;
  }
  return best;
}

}  // namespace oracle
