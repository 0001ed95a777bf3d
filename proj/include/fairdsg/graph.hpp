#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairdsg/error.hpp"

namespace fairdsg {

using NodeId = std::uint32_t;

enum class Color : std::uint8_t { Red, Blue };

struct Edge {
  NodeId u;
  NodeId v;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node;
  double weight;
};

/// Undirected, weighted, simple graph on nodes 0..n-1.
///
/// Built once through from_edges() and immutable afterwards. The edge list is
/// canonical: every edge is stored once with u < v, sorted lexicographically,
/// so two graphs built from permutations of the same input compare equal.
/// Adjacency is kept in compressed sparse rows, sorted by neighbor id.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Self-loops are dropped and counted; parallel edges are merged by summing
  /// their weights. Throws Error on an out-of-range endpoint or a negative or
  /// non-finite weight.
  static LabeledGraph from_edges(std::size_t n, std::vector<Edge> edges,
                                 std::vector<std::string> node_names = {});

  std::size_t num_nodes() const noexcept { return degrees_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  double degree(NodeId u) const { return degrees_[u]; }
  std::span<const double> degrees() const noexcept { return degrees_; }
  double max_degree() const noexcept { return max_degree_; }
  double total_weight() const noexcept { return total_weight_; }

  // Weight of edge {u, v}, 0 when absent. O(log deg(u)).
  double weight(NodeId u, NodeId v) const;

  // Optional external identifiers; empty when the graph carries none.
  const std::vector<std::string>& node_names() const noexcept { return names_; }

  std::size_t dropped_self_loops() const noexcept { return dropped_self_loops_; }
  std::size_t merged_duplicates() const noexcept { return merged_duplicates_; }

  // True when every weight is a non-negative integer small enough for exact
  // integer arithmetic in the flow solver.
  bool has_integral_weights() const noexcept { return integral_weights_; }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.num_nodes() == b.num_nodes() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> degrees_;
  std::vector<std::string> names_;
  double max_degree_ = 0.0;
  double total_weight_ = 0.0;
  std::size_t dropped_self_loops_ = 0;
  std::size_t merged_duplicates_ = 0;
  bool integral_weights_ = true;
};

class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<Color> colors);

  // "RRBB" style; any other character throws.
  static Coloring from_string(std::string_view rb);

  std::size_t size() const noexcept { return colors_.size(); }
  Color operator[](NodeId u) const { return colors_[u]; }
  std::span<const Color> colors() const noexcept { return colors_; }
  std::size_t n_red() const noexcept { return n_red_; }
  std::size_t n_blue() const noexcept { return colors_.size() - n_red_; }
  bool is_fair() const noexcept { return n_red() == n_blue(); }
  std::string to_string() const;

  friend bool operator==(const Coloring& a, const Coloring& b) { return a.colors_ == b.colors_; }

 private:
  std::vector<Color> colors_;
  std::size_t n_red_ = 0;
};

/// Strictly sorted set of node ids.
class NodeSet {
 public:
  NodeSet() = default;
  // Sorts and removes duplicates.
  explicit NodeSet(std::vector<NodeId> members);
  static NodeSet all(std::size_t n);

  std::span<const NodeId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(NodeId u) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  // Normalized indicator: 1/sqrt(|S|) on members, 0 elsewhere.
  std::vector<double> indicator(std::size_t n) const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> members_;
};

struct ColorCounts {
  std::size_t red = 0;
  std::size_t blue = 0;
};

ColorCounts color_counts(const NodeSet& s, const Coloring& c);

// Total weight of edges with both endpoints in s.
double internal_weight(const LabeledGraph& g, const NodeSet& s);

/// Average weighted degree of the induced subgraph, 2 w(E_S) / |S|.
/// Throws Error("empty-set density undefined") for an empty set.
double density(const LabeledGraph& g, const NodeSet& s);

/// min(x/y, y/x) over the red/blue counts; 0 when a color is absent.
double balance(const NodeSet& s, const Coloring& c);

std::int64_t imbalance(const NodeSet& s, const Coloring& c);
inline bool is_fair(const NodeSet& s, const Coloring& c) { return imbalance(s, c) == 0; }

/// Induced subgraph relabeled densely in member order. Node names carry the
/// original identifiers: the parent's names when present, decimal ids otherwise.
LabeledGraph induced_subgraph(const LabeledGraph& g, const NodeSet& s);
Coloring restrict_coloring(const Coloring& c, const NodeSet& s);

}  // namespace fairdsg
