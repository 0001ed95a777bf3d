#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "fairdsg/graph.hpp"

namespace testing {

inline fairdsg::LabeledGraph unit_graph(std::size_t n,
                                        std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<fairdsg::Edge> edges;
  for (auto [u, v] : pairs) {
    edges.push_back({static_cast<fairdsg::NodeId>(u), static_cast<fairdsg::NodeId>(v), 1.0});
  }
  return fairdsg::LabeledGraph::from_edges(n, std::move(edges));
}

inline fairdsg::LabeledGraph complete_graph(std::size_t n) {
  std::vector<fairdsg::Edge> edges;
  for (fairdsg::NodeId u = 0; u < n; ++u) {
    for (fairdsg::NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  }
  return fairdsg::LabeledGraph::from_edges(n, std::move(edges));
}

inline fairdsg::LabeledGraph triangle() { return unit_graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

inline fairdsg::NodeSet set(std::initializer_list<fairdsg::NodeId> ids) {
  return fairdsg::NodeSet(std::vector<fairdsg::NodeId>(ids));
}

}  // namespace testing
