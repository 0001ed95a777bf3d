#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fairdsg/error.hpp"

namespace fairdsg {

/// Directed network with a designated source and sink. Capacity is either
/// std::int64_t (exact) or double (exact up to a relative epsilon).
template <class Capacity>
class BasicFlowNetwork {
 public:
  struct Arc {
    std::size_t from;
    std::size_t to;
    Capacity capacity;
  };

  BasicFlowNetwork(std::size_t nodes, std::size_t source, std::size_t sink)
      : nodes_(nodes), source_(source), sink_(sink) {}

  void add_arc(std::size_t from, std::size_t to, Capacity capacity) {
    arcs_.push_back({from, to, capacity});
  }

  std::size_t num_nodes() const noexcept { return nodes_; }
  std::size_t source() const noexcept { return source_; }
  std::size_t sink() const noexcept { return sink_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

 private:
  std::size_t nodes_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Arc> arcs_;
};

using FlowNetwork = BasicFlowNetwork<double>;
using IntegerFlowNetwork = BasicFlowNetwork<std::int64_t>;

template <class Capacity>
struct FlowResult {
  Capacity value{};
  // Nodes reachable from the source in the final residual network, sorted;
  // always contains the source. This is the minimal minimum-cut source side.
  std::vector<std::size_t> source_side;
};

/// Dinic's algorithm. Throws Error on a malformed network: source == sink,
/// endpoints out of range, or a negative or non-finite capacity.
template <class Capacity>
FlowResult<Capacity> max_flow(const BasicFlowNetwork<Capacity>& net);

extern template FlowResult<double> max_flow(const FlowNetwork&);
extern template FlowResult<std::int64_t> max_flow(const IntegerFlowNetwork&);

}  // namespace fairdsg
