#include "fairdsg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace fairdsg {

LabeledGraph LabeledGraph::from_edges(std::size_t n, std::vector<Edge> edges,
                                      std::vector<std::string> node_names) {
  if (!node_names.empty() && node_names.size() != n) {
    throw Error("node_names has " + std::to_string(node_names.size()) + " entries for " +
                std::to_string(n) + " nodes");
  }
  LabeledGraph g;
  g.names_ = std::move(node_names);

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                  ") out of range for " + std::to_string(n) + " nodes");
    }
    if (!std::isfinite(e.w) || e.w < 0.0) {
      throw Error("edge weight must be finite and non-negative");
    }
    if (e.u == e.v) {
      ++g.dropped_self_loops_;
      continue;
    }
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
  }
  std::sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const Edge& e : canon) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
      g.edges_.back().w += e.w;
      ++g.merged_duplicates_;
    } else {
      g.edges_.push_back(e);
    }
  }

  g.degrees_.assign(n, 0.0);
  std::vector<std::size_t> count(n, 0);
  for (const Edge& e : g.edges_) {
    ++count[e.u];
    ++count[e.v];
    g.total_weight_ += e.w;
    if (e.w != std::floor(e.w) || e.w > 2147483648.0) g.integral_weights_ = false;
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + count[u];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so appending in order yields sorted rows.
  for (const Edge& e : g.edges_) g.adjacency_[fill[e.v]++] = {e.u, e.w};
  for (const Edge& e : g.edges_) g.adjacency_[fill[e.u]++] = {e.v, e.w};
  for (std::size_t u = 0; u < n; ++u) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    double d = 0.0;
    for (auto it = first; it != last; ++it) d += it->weight;
    g.degrees_[u] = d;
    g.max_degree_ = std::max(g.max_degree_, d);
  }
  return g;
}

double LabeledGraph::weight(NodeId u, NodeId v) const {
  auto row = neighbors(u);
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const Neighbor& a, NodeId id) { return a.node < id; });
  return it != row.end() && it->node == v ? it->weight : 0.0;
}

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
  n_red_ = static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), Color::Red));
}

Coloring Coloring::from_string(std::string_view rb) {
  std::vector<Color> colors;
  colors.reserve(rb.size());
  for (char ch : rb) {
    if (ch == 'R') {
      colors.push_back(Color::Red);
    } else if (ch == 'B') {
      colors.push_back(Color::Blue);
    } else {
      throw Error(std::string("invalid color character '") + ch + "'");
    }
  }
  return Coloring(std::move(colors));
}

std::string Coloring::to_string() const {
  std::string s;
  s.reserve(colors_.size());
  for (Color c : colors_) s.push_back(c == Color::Red ? 'R' : 'B');
  return s;
}

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet NodeSet::all(std::size_t n) {
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  return NodeSet(std::move(ids));
}

bool NodeSet::contains(NodeId u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

std::vector<double> NodeSet::indicator(std::size_t n) const {
  std::vector<double> chi(n, 0.0);
  if (members_.empty()) return chi;
  const double value = 1.0 / std::sqrt(static_cast<double>(members_.size()));
  for (NodeId u : members_) {
    if (u >= n) throw Error("node id " + std::to_string(u) + " out of range");
    chi[u] = value;
  }
  return chi;
}

ColorCounts color_counts(const NodeSet& s, const Coloring& c) {
  ColorCounts counts;
  for (NodeId u : s) {
    if (u >= c.size()) throw Error("node id " + std::to_string(u) + " out of range");
    if (c[u] == Color::Red) {
      ++counts.red;
    } else {
      ++counts.blue;
    }
  }
  return counts;
}

double internal_weight(const LabeledGraph& g, const NodeSet& s) {
  std::vector<char> in(g.num_nodes(), 0);
  for (NodeId u : s) {
    if (u >= g.num_nodes()) throw Error("node id " + std::to_string(u) + " out of range");
    in[u] = 1;
  }
  double w = 0.0;
  for (NodeId u : s) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.node > u && in[nb.node]) w += nb.weight;
    }
  }
  return w;
}

double density(const LabeledGraph& g, const NodeSet& s) {
  if (s.empty()) throw Error("empty-set density undefined");
  return 2.0 * internal_weight(g, s) / static_cast<double>(s.size());
}

double balance(const NodeSet& s, const Coloring& c) {
  if (s.empty()) throw Error("empty-set balance undefined");
  const ColorCounts k = color_counts(s, c);
  if (k.red == 0 || k.blue == 0) return 0.0;
  const double x = static_cast<double>(k.red);
  const double y = static_cast<double>(k.blue);
  return std::min(x / y, y / x);
}

std::int64_t imbalance(const NodeSet& s, const Coloring& c) {
  const ColorCounts k = color_counts(s, c);
  return std::llabs(static_cast<long long>(k.red) - static_cast<long long>(k.blue));
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const NodeSet& s) {
  constexpr NodeId kAbsent = ~NodeId{0};
  std::vector<NodeId> local(g.num_nodes(), kAbsent);
  std::vector<std::string> names;
  names.reserve(s.size());
  NodeId next = 0;
  for (NodeId u : s) {
    if (u >= g.num_nodes()) throw Error("node id " + std::to_string(u) + " out of range");
    local[u] = next++;
    names.push_back(g.node_names().empty() ? std::to_string(u) : g.node_names()[u]);
  }
  std::vector<Edge> edges;
  for (NodeId u : s) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.node > u && local[nb.node] != kAbsent) {
        edges.push_back({local[u], local[nb.node], nb.weight});
      }
    }
  }
  return LabeledGraph::from_edges(s.size(), std::move(edges), std::move(names));
}

Coloring restrict_coloring(const Coloring& c, const NodeSet& s) {
  std::vector<Color> colors;
  colors.reserve(s.size());
  for (NodeId u : s) {
    if (u >= c.size()) throw Error("node id " + std::to_string(u) + " out of range");
    colors.push_back(c[u]);
  }
  return Coloring(std::move(colors));
}

}  // namespace fairdsg
