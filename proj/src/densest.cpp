#include "fairdsg/densest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <queue>
#include <utility>

#include "fairdsg/flow.hpp"

namespace fairdsg {

namespace {

struct CutSide {
  std::vector<NodeId> nodes;
  double flow = 0.0;
};

template <class Capacity>
CutSide parametric_cut(const LabeledGraph& g, Capacity node_scale, Capacity sink_capacity,
                       auto&& to_capacity) {
  const std::size_t n = g.num_nodes();
  BasicFlowNetwork<Capacity> net(n + 2, n, n + 1);
  for (std::size_t u = 0; u < n; ++u) {
    net.add_arc(n, u, node_scale * to_capacity(g.degree(static_cast<NodeId>(u))));
    net.add_arc(u, n + 1, sink_capacity);
  }
  for (const Edge& e : g.edges()) {
    const Capacity c = node_scale * to_capacity(e.w);
    net.add_arc(e.u, e.v, c);
    net.add_arc(e.v, e.u, c);
  }
  const FlowResult<Capacity> r = max_flow(net);
  CutSide side;
  side.flow = static_cast<double>(r.value);
  for (std::size_t u : r.source_side) {
    if (u < n) side.nodes.push_back(static_cast<NodeId>(u));
  }
  return side;
}

__extension__ using Wide = __int128;

// Half-density w(E_S)/|S| as an exact fraction for integral weights.
struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

bool greater(Fraction a, Fraction b) {
  return static_cast<Wide>(a.num) * b.den > static_cast<Wide>(b.num) * a.den;
}

std::int64_t as_int(double w) { return std::llround(w); }

DensestResult solve_integral(const LabeledGraph& g) {
  const auto n = static_cast<std::int64_t>(g.num_nodes());
  const std::int64_t scale = n * (n - 1);
  const std::int64_t total = as_int(g.total_weight());
  const std::int64_t dmax = as_int(g.max_degree());

  DensestResult result;
  NodeSet best_set = NodeSet::all(g.num_nodes());
  Fraction best{total, n};

  auto evaluate = [&](std::int64_t node_scale, std::int64_t sink_capacity) {
    ++result.iterations;
    return parametric_cut<std::int64_t>(g, node_scale, sink_capacity, as_int);
  };
  auto consider = [&](const std::vector<NodeId>& side) {
    NodeSet s(side);
    const Fraction f{as_int(internal_weight(g, s)), static_cast<std::int64_t>(s.size())};
    if (greater(f, best)) {
      best = f;
      best_set = std::move(s);
    }
    return f;
  };

  // Guesses are k / scale; distinct half-densities differ by at least 1/scale.
  std::int64_t lo = static_cast<std::int64_t>(static_cast<Wide>(total) * scale / n);
  std::int64_t hi = (dmax * scale + 1) / 2;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    const CutSide side = evaluate(scale, 2 * mid);
    if (side.nodes.empty()) {
      hi = mid;
    } else {
      const Fraction f = consider(side.nodes);
      lo = std::max(mid, static_cast<std::int64_t>(static_cast<Wide>(f.num) * scale / f.den));
    }
  }
  // Certify: at guess = best exactly, the cut side must be empty.
  while (true) {
    const CutSide side = evaluate(best.den, 2 * best.num);
    result.flow_value = side.flow / static_cast<double>(best.den);
    if (side.nodes.empty()) break;
    const Fraction before = best;
    consider(side.nodes);
    if (!greater(best, before)) break;
  }
  result.density = density(g, best_set);
  result.nodes = std::move(best_set);
  return result;
}

DensestResult solve_real(const LabeledGraph& g, double precision) {
  const auto n = static_cast<double>(g.num_nodes());
  DensestResult result;
  NodeSet best_set = NodeSet::all(g.num_nodes());
  double best = g.total_weight() / n;

  auto evaluate = [&](double guess) {
    ++result.iterations;
    return parametric_cut<double>(g, 1.0, 2.0 * guess, [](double w) { return w; });
  };
  auto consider = [&](const std::vector<NodeId>& side) {
    NodeSet s(side);
    const double h = internal_weight(g, s) / static_cast<double>(s.size());
    if (h > best) {
      best = h;
      best_set = std::move(s);
    }
    return h;
  };

  double lo = best;
  double hi = g.max_degree() / 2.0;
  while (hi - lo > precision) {
    const double mid = 0.5 * (lo + hi);
    const CutSide side = evaluate(mid);
    if (side.nodes.empty()) {
      hi = mid;
    } else {
      lo = std::max(mid, consider(side.nodes));
    }
  }
  while (true) {
    const CutSide side = evaluate(best);
    result.flow_value = side.flow;
    if (side.nodes.empty()) break;
    const double before = best;
    consider(side.nodes);
    if (!(best > before * (1.0 + 1e-12))) break;
  }
  result.density = density(g, best_set);
  result.nodes = std::move(best_set);
  return result;
}

bool fits_integer_path(const LabeledGraph& g) {
  if (!g.has_integral_weights()) return false;
  const double n = static_cast<double>(g.num_nodes());
  const double scale = n * (n - 1.0);
  // Largest capacity sum the solver can produce, with headroom.
  const double bound = scale * (2.0 * g.total_weight() + n * g.max_degree() + 1.0);
  return bound < 0x1.0p61;
}

}  // namespace

DensestResult exact_densest_subgraph(const LabeledGraph& g, const DensestOptions& options) {
  if (g.num_nodes() == 0) throw Error("densest subgraph of an empty graph");
  if (g.num_edges() == 0 || g.total_weight() == 0.0) {
    const auto it = std::max_element(g.degrees().begin(), g.degrees().end());
    DensestResult r;
    r.nodes = NodeSet({static_cast<NodeId>(it - g.degrees().begin())});
    return r;
  }
  if (fits_integer_path(g)) return solve_integral(g);
  const double precision = options.precision > 0.0 ? options.precision : 1e-9 * g.max_degree();
  return solve_real(g, precision);
}

namespace {

// Pads `start` with nodes of the minority color, calling visit(set) on the
// starting set and after every added node. Returns the final set and whether
// it is balanced.
template <class Visit>
std::pair<NodeSet, bool> pad_to_fairness(const LabeledGraph& g, const Coloring& c,
                                         const NodeSet& start, Visit&& visit) {
  std::vector<NodeId> members(start.begin(), start.end());
  visit(start);
  const ColorCounts k = color_counts(start, c);
  if (k.red == k.blue) return {start, true};
  const Color minority = k.red < k.blue ? Color::Red : Color::Blue;
  std::size_t missing = k.red < k.blue ? k.blue - k.red : k.red - k.blue;

  std::vector<char> in(g.num_nodes(), 0);
  for (NodeId u : start) in[u] = 1;
  std::vector<double> into(g.num_nodes(), 0.0);
  for (NodeId u : start) {
    for (const Neighbor& nb : g.neighbors(u)) into[nb.node] += nb.weight;
  }
  // Max-heap on (weight into S, -id); stale entries are skipped on pop.
  using Entry = std::pair<double, std::int64_t>;
  std::priority_queue<Entry> heap;
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    if (!in[u] && c[static_cast<NodeId>(u)] == minority) {
      heap.push({into[u], -static_cast<std::int64_t>(u)});
    }
  }
  while (missing > 0 && !heap.empty()) {
    const auto [w, neg_id] = heap.top();
    heap.pop();
    const auto u = static_cast<NodeId>(-neg_id);
    if (in[u] || w != into[u]) continue;
    in[u] = 1;
    members.push_back(u);
    --missing;
    for (const Neighbor& nb : g.neighbors(u)) {
      into[nb.node] += nb.weight;
      if (!in[nb.node] && c[nb.node] == minority) {
        heap.push({into[nb.node], -static_cast<std::int64_t>(nb.node)});
      }
    }
    visit(NodeSet(members));
  }
  return {NodeSet(std::move(members)), missing == 0};
}

}  // namespace

SolutionRecord two_dfsg(const LabeledGraph& g, const Coloring& c) {
  if (c.size() != g.num_nodes()) throw Error("coloring does not match graph size");
  const auto start = std::chrono::steady_clock::now();
  const DensestResult densest = exact_densest_subgraph(g);
  auto [nodes, balanced] = pad_to_fairness(g, c, densest.nodes, [](const NodeSet&) {});
  SolutionRecord r =
      make_record("2DFSG", g, c, std::move(nodes), balanced ? Status::Found : Status::Unfair);
  r.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Candidate> two_dfsg_trace(const LabeledGraph& g, const Coloring& c) {
  if (c.size() != g.num_nodes()) throw Error("coloring does not match graph size");
  const DensestResult densest = exact_densest_subgraph(g);
  std::vector<Candidate> out;
  pad_to_fairness(g, c, densest.nodes, [&](const NodeSet& s) {
    out.push_back({Ordering::NonIncreasing, s.size(), density(g, s), balance(s, c)});
  });
  return out;
}

}  // namespace fairdsg
