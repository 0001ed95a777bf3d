#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "fairdsg/graph.hpp"

namespace fairdsg {

struct ColoredGraph {
  LabeledGraph graph;
  Coloring coloring;
};

/// Plain-text interchange format:
///
///   n n_red n_blue
///   RBRB...            (one character per node)
///   u v w              (one line per edge, u < v, sorted)
///
/// Weights are written in shortest round-trip form, so write/read/write is
/// byte-identical. Lines starting with '#' before the header are skipped.
void write_edge_list(std::ostream& out, const LabeledGraph& g, const Coloring& c);
std::string edge_list_string(const LabeledGraph& g, const Coloring& c);

// Throws ParseError with the line number on malformed input.
ColoredGraph read_edge_list(std::istream& in);
ColoredGraph parse_edge_list(std::string_view text);

// Shortest representation that parses back to exactly `x`.
std::string shortest_double(double x);

}  // namespace fairdsg
