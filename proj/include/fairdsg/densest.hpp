#pragma once

#include <cstddef>
#include <vector>

#include "fairdsg/graph.hpp"
#include "fairdsg/sweep.hpp"

namespace fairdsg {

struct DensestResult {
  NodeSet nodes;
  double density = 0.0;      // 2 w(E_S) / |S|
  double flow_value = 0.0;   // max-flow value at the certifying guess
  std::size_t iterations = 0;  // max-flow evaluations performed
};

struct DensestOptions {
  // Binary-search width for graphs with non-integral weights; 0 selects
  // 1e-9 * d_max. Integral graphs always use the exact 1/(n(n-1)) bound.
  double precision = 0.0;
};

/// Exact densest subgraph by parametric min cut: source->u with capacity d_u,
/// u->sink with 2*guess, and both directions of every edge with its weight.
/// A non-empty cut side exists iff some set has w(E_S)/|S| > guess.
/// Edgeless graphs yield the lowest-id node of maximum degree with density 0.
DensestResult exact_densest_subgraph(const LabeledGraph& g, const DensestOptions& options = {});

/// Densest subgraph padded to fairness with nodes of the minority color,
/// always the node with the most weight into the current set (lowest id on
/// ties). Status Unfair, with the partially padded set, when that color runs out.
SolutionRecord two_dfsg(const LabeledGraph& g, const Coloring& c);

// Every intermediate set of two_dfsg, from the densest subgraph through each
// padding step.
std::vector<Candidate> two_dfsg_trace(const LabeledGraph& g, const Coloring& c);

}  // namespace fairdsg
