#include "fairdsg/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

namespace fairdsg {

namespace {

template <class Capacity>
class Dinic {
 public:
  Dinic(std::size_t n, Capacity eps) : graph_(n), level_(n), next_(n), eps_(eps) {}

  void add(std::size_t a, std::size_t b, Capacity cap) {
    graph_[a].push_back({b, graph_[b].size(), cap});
    graph_[b].push_back({a, graph_[a].size() - 1, Capacity{}});
  }

  Capacity run(std::size_t s, std::size_t t) {
    Capacity flow{};
    while (build_levels(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (true) {
        const Capacity pushed = augment(s, t, std::numeric_limits<Capacity>::max());
        if (!(pushed > eps_)) break;
        flow += pushed;
      }
    }
    return flow;
  }

  std::vector<std::size_t> reachable(std::size_t s) const {
    std::vector<char> seen(graph_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const Residual& e : graph_[u]) {
        if (e.cap > eps_ && !seen[e.to]) {
          seen[e.to] = 1;
          stack.push_back(e.to);
        }
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < seen.size(); ++u) {
      if (seen[u]) out.push_back(u);
    }
    return out;
  }

 private:
  struct Residual {
    std::size_t to;
    std::size_t rev;
    Capacity cap;
  };

  bool build_levels(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<std::size_t> queue{s};
    level_[s] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t u = queue[qi];
      for (const Residual& e : graph_[u]) {
        if (e.cap > eps_ && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  // Iterative blocking-flow DFS along the level graph.
  Capacity augment(std::size_t s, std::size_t t, Capacity limit) {
    std::vector<std::size_t> path;  // vertices on the current path
    std::size_t u = s;
    path.push_back(s);
    while (true) {
      if (u == t) {
        Capacity bottleneck = limit;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          bottleneck = std::min(bottleneck, graph_[path[i]][next_[path[i]]].cap);
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          Residual& e = graph_[path[i]][next_[path[i]]];
          e.cap -= bottleneck;
          graph_[e.to][e.rev].cap += bottleneck;
        }
        return bottleneck;
      }
      bool advanced = false;
      for (std::size_t& i = next_[u]; i < graph_[u].size(); ++i) {
        const Residual& e = graph_[u][i];
        if (e.cap > eps_ && level_[e.to] == level_[u] + 1) {
          u = e.to;
          path.push_back(u);
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      // Dead end: retreat and skip the arc that led here.
      level_[u] = -1;
      path.pop_back();
      if (path.empty()) return Capacity{};
      u = path.back();
      ++next_[u];
    }
  }

  std::vector<std::vector<Residual>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
  Capacity eps_;
};

}  // namespace

template <class Capacity>
FlowResult<Capacity> max_flow(const BasicFlowNetwork<Capacity>& net) {
  const std::size_t n = net.num_nodes();
  if (net.source() >= n || net.sink() >= n) throw Error("source or sink out of range");
  if (net.source() == net.sink()) throw Error("source and sink coincide");
  Capacity largest{};
  for (const auto& a : net.arcs()) {
    if (a.from >= n || a.to >= n) {
      throw Error("arc (" + std::to_string(a.from) + ", " + std::to_string(a.to) +
                  ") out of range");
    }
    if constexpr (std::is_floating_point_v<Capacity>) {
      if (!std::isfinite(a.capacity)) throw Error("non-finite capacity");
    }
    if (a.capacity < Capacity{}) throw Error("negative capacity");
    largest = std::max(largest, a.capacity);
  }
  Capacity eps{};
  if constexpr (std::is_floating_point_v<Capacity>) eps = largest * 1e-12;

  Dinic<Capacity> dinic(n, eps);
  for (const auto& a : net.arcs()) {
    if (a.from != a.to) dinic.add(a.from, a.to, a.capacity);
  }
  FlowResult<Capacity> result;
  result.value = dinic.run(net.source(), net.sink());
  result.source_side = dinic.reachable(net.source());
  return result;
}

template FlowResult<double> max_flow(const FlowNetwork&);
template FlowResult<std::int64_t> max_flow(const IntegerFlowNetwork&);

}  // namespace fairdsg
