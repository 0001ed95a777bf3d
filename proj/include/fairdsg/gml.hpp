#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fairdsg/graph.hpp"

namespace fairdsg {

struct GmlNode {
  std::int64_t id = 0;
  std::string label;
  std::string value;
};

struct GmlEdge {
  std::int64_t source = 0;
  std::int64_t target = 0;
};

struct GmlDocument {
  std::vector<GmlNode> nodes;
  std::vector<GmlEdge> edges;
};

/// Reads the `graph [ node [...] edge [...] ]` subset of GML. Keys other than
/// id/label/value/source/target are skipped, including nested lists. Throws
/// ParseError with the offending line on unbalanced brackets, a duplicate
/// node id, or an edge that names an undeclared node.
GmlDocument parse_gml(std::string_view text);

struct PolbooksGraph {
  LabeledGraph graph;
  Coloring coloring;
  std::size_t dropped_neutral = 0;
};

/// Keeps conservative (Red) and liberal (Blue) books, dropping neutral ones
/// and their edges. Accepts "c"/"l"/"n" as well as the full words. Node
/// names are the GML labels, nodes ordered by GML id.
PolbooksGraph polbooks_graph(const GmlDocument& doc);

}  // namespace fairdsg
