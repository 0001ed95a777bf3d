#include "fairdsg/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace fairdsg {

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::NonIncreasing: return "non_increasing";
    case Ordering::NonDecreasing: return "non_decreasing";
    case Ordering::AbsNonIncreasing: return "abs_non_increasing";
    case Ordering::AbsNonDecreasing: return "abs_non_decreasing";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Found: return "Found";
    case Status::NoFeasiblePrefix: return "NoFeasiblePrefix";
    case Status::Unfair: return "Unfair";
  }
  return "?";
}

Status status_from_string(std::string_view s) {
  if (s == "Found") return Status::Found;
  if (s == "NoFeasiblePrefix") return Status::NoFeasiblePrefix;
  if (s == "Unfair") return Status::Unfair;
  throw Error("unknown status '" + std::string(s) + "'");
}

std::string_view to_string(SpectralAlgorithm a) {
  switch (a) {
    case SpectralAlgorithm::SS: return "SS";
    case SpectralAlgorithm::FSS: return "FSS";
    case SpectralAlgorithm::PS: return "PS";
    case SpectralAlgorithm::FPS: return "FPS";
  }
  return "?";
}

SolutionRecord make_record(std::string algorithm, const LabeledGraph& g, const Coloring& c,
                           NodeSet nodes, Status status) {
  SolutionRecord r;
  r.algorithm = std::move(algorithm);
  r.status = status;
  if (!nodes.empty()) {
    const ColorCounts k = color_counts(nodes, c);
    r.density = density(g, nodes);
    r.balance = balance(nodes, c);
    r.imbalance = imbalance(nodes, c);
    r.n_red = k.red;
    r.n_blue = k.blue;
    r.size = nodes.size();
  }
  r.fair = status == Status::Found && !nodes.empty() && r.imbalance == 0;
  r.nodes = std::move(nodes);
  return r;
}

std::vector<NodeId> sweep_order(std::span<const double> v, Ordering ordering,
                                std::span<const NodeId> nodes) {
  std::vector<NodeId> order(nodes.begin(), nodes.end());
  auto key = [&](NodeId u) {
    switch (ordering) {
      case Ordering::NonIncreasing:
      case Ordering::NonDecreasing: return v[u];
      default: return std::abs(v[u]);
    }
  };
  const bool descending =
      ordering == Ordering::NonIncreasing || ordering == Ordering::AbsNonIncreasing;
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return descending ? key(a) > key(b) : key(a) < key(b);
  });
  return order;
}

namespace {

void check_vector(const LabeledGraph& g, const Coloring& c, std::span<const double> v) {
  if (v.size() != g.num_nodes() || c.size() != g.num_nodes()) {
    throw Error("dimension mismatch: graph has " + std::to_string(g.num_nodes()) +
                " nodes, vector " + std::to_string(v.size()) + ", coloring " +
                std::to_string(c.size()));
  }
}

// Grows a node set one node at a time, tracking its internal weight.
class PrefixScanner {
 public:
  PrefixScanner(const LabeledGraph& g, const Coloring& c)
      : graph_(g), coloring_(c), in_(g.num_nodes(), 0) {}

  void reset() {
    for (NodeId u : added_) in_[u] = 0;
    added_.clear();
    weight_ = 0.0;
    red_ = 0;
  }

  void add(NodeId u) {
    double w = 0.0;
    for (const Neighbor& nb : graph_.neighbors(u)) {
      if (in_[nb.node]) w += nb.weight;
    }
    weight_ += w;
    in_[u] = 1;
    added_.push_back(u);
    if (coloring_[u] == Color::Red) ++red_;
  }

  double weight() const { return weight_; }
  std::size_t size() const { return added_.size(); }
  std::size_t red() const { return red_; }
  std::size_t blue() const { return added_.size() - red_; }
  double density() const { return 2.0 * weight_ / static_cast<double>(added_.size()); }
  double balance() const {
    if (red() == 0 || blue() == 0) return 0.0;
    const auto x = static_cast<double>(red());
    const auto y = static_cast<double>(blue());
    return std::min(x / y, y / x);
  }
  std::size_t imbalance() const { return red() > blue() ? red() - blue() : blue() - red(); }

 private:
  const LabeledGraph& graph_;
  const Coloring& coloring_;
  std::vector<char> in_;
  std::vector<NodeId> added_;
  double weight_ = 0.0;
  std::size_t red_ = 0;
};

struct Best {
  bool found = false;
  double weight = 0.0;
  std::size_t size = 0;
  std::size_t ordering_index = 0;

  // Strictly denser, or equally dense and smaller. Density compared as
  // w1/s1 vs w2/s2 by cross-multiplication to keep integer ties exact.
  bool improved_by(double w, std::size_t s) const {
    if (!found) return true;
    const double lhs = w * static_cast<double>(size);
    const double rhs = weight * static_cast<double>(s);
    if (lhs != rhs) return lhs > rhs;
    return s < size;
  }
};

std::vector<NodeId> nodes_of_color(const Coloring& c, Color color) {
  std::vector<NodeId> out;
  for (std::size_t u = 0; u < c.size(); ++u) {
    if (c[static_cast<NodeId>(u)] == color) out.push_back(static_cast<NodeId>(u));
  }
  return out;
}

// Calls visit(ordering_index, scanner) after each prefix of each ordering.
template <class Visit>
void scan_general(const LabeledGraph& g, const Coloring& c, std::span<const double> v,
                  std::span<const Ordering> orderings, Visit&& visit) {
  const NodeSet all = NodeSet::all(g.num_nodes());
  PrefixScanner scanner(g, c);
  for (std::size_t k = 0; k < orderings.size(); ++k) {
    scanner.reset();
    for (NodeId u : sweep_order(v, orderings[k], all.members())) {
      scanner.add(u);
      visit(k, scanner);
    }
  }
}

// Same for pair-prefixes: the top s red plus the top s blue nodes.
template <class Visit>
void scan_paired(const LabeledGraph& g, const Coloring& c, std::span<const double> v,
                 std::span<const Ordering> orderings, Visit&& visit) {
  const std::vector<NodeId> reds = nodes_of_color(c, Color::Red);
  const std::vector<NodeId> blues = nodes_of_color(c, Color::Blue);
  const std::size_t pairs = std::min(reds.size(), blues.size());
  PrefixScanner scanner(g, c);
  for (std::size_t k = 0; k < orderings.size(); ++k) {
    scanner.reset();
    const std::vector<NodeId> r = sweep_order(v, orderings[k], reds);
    const std::vector<NodeId> b = sweep_order(v, orderings[k], blues);
    for (std::size_t s = 0; s < pairs; ++s) {
      scanner.add(r[s]);
      scanner.add(b[s]);
      visit(k, scanner);
    }
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

SolutionRecord general_sweep(const LabeledGraph& g, const Coloring& c, std::span<const double> v,
                             double delta, std::span<const Ordering> orderings) {
  check_vector(g, c, v);
  if (!(delta >= 0.0)) throw Error("delta must be non-negative");
  Best best;
  scan_general(g, c, v, orderings, [&](std::size_t k, const PrefixScanner& p) {
    const bool feasible =
        static_cast<double>(p.imbalance()) <= delta * static_cast<double>(p.size());
    if (feasible && best.improved_by(p.weight(), p.size())) {
      best = {true, p.weight(), p.size(), k};
    }
  });
  if (!best.found) return make_record("general_sweep", g, c, {}, Status::NoFeasiblePrefix);
  std::vector<NodeId> order =
      sweep_order(v, orderings[best.ordering_index], NodeSet::all(g.num_nodes()).members());
  order.resize(best.size);
  return make_record("general_sweep", g, c, NodeSet(std::move(order)), Status::Found);
}

SolutionRecord paired_sweep(const LabeledGraph& g, const Coloring& c, std::span<const double> v,
                            std::span<const Ordering> orderings) {
  check_vector(g, c, v);
  Best best;
  scan_paired(g, c, v, orderings, [&](std::size_t k, const PrefixScanner& p) {
    if (best.improved_by(p.weight(), p.size())) best = {true, p.weight(), p.size(), k};
  });
  if (!best.found) return make_record("paired_sweep", g, c, {}, Status::NoFeasiblePrefix);
  const std::size_t s = best.size / 2;
  const Ordering o = orderings[best.ordering_index];
  std::vector<NodeId> r = sweep_order(v, o, nodes_of_color(c, Color::Red));
  std::vector<NodeId> b = sweep_order(v, o, nodes_of_color(c, Color::Blue));
  std::vector<NodeId> members(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(s));
  members.insert(members.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(s));
  return make_record("paired_sweep", g, c, NodeSet(std::move(members)), Status::Found);
}

std::vector<Candidate> general_sweep_trace(const LabeledGraph& g, const Coloring& c,
                                           std::span<const double> v,
                                           std::span<const Ordering> orderings) {
  check_vector(g, c, v);
  std::vector<Candidate> out;
  out.reserve(orderings.size() * g.num_nodes());
  scan_general(g, c, v, orderings, [&](std::size_t k, const PrefixScanner& p) {
    out.push_back({orderings[k], p.size(), p.density(), p.balance()});
  });
  return out;
}

std::vector<Candidate> paired_sweep_trace(const LabeledGraph& g, const Coloring& c,
                                          std::span<const double> v,
                                          std::span<const Ordering> orderings) {
  check_vector(g, c, v);
  std::vector<Candidate> out;
  scan_paired(g, c, v, orderings, [&](std::size_t k, const PrefixScanner& p) {
    out.push_back({orderings[k], p.size(), p.density(), p.balance()});
  });
  return out;
}

EigenPair sweep_vector(const LabeledGraph& g, const Coloring& c, MatrixKind matrix,
                       const EigenSettings& settings) {
  if (c.size() != g.num_nodes()) throw Error("coloring does not match graph size");
  if (matrix == MatrixKind::Raw) return dominant_eigenpair(AdjacencyOperator(g), settings);
  return dominant_eigenpair(ProjectedOperator(g, FairnessVector(c)), settings);
}

namespace {

MatrixKind matrix_of(SpectralAlgorithm a) {
  return a == SpectralAlgorithm::SS || a == SpectralAlgorithm::PS ? MatrixKind::Raw
                                                                   : MatrixKind::Projected;
}

bool is_paired(SpectralAlgorithm a) {
  return a == SpectralAlgorithm::PS || a == SpectralAlgorithm::FPS;
}

}  // namespace

SolutionRecord run_algorithm(SpectralAlgorithm algorithm, const LabeledGraph& g,
                             const Coloring& c, const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const EigenPair e = sweep_vector(g, c, matrix_of(algorithm), cfg.eigen);
  SolutionRecord r = is_paired(algorithm) ? paired_sweep(g, c, e.vector, cfg.orderings)
                                          : general_sweep(g, c, e.vector, cfg.delta,
                                                          cfg.orderings);
  r.algorithm = std::string(to_string(algorithm));
  r.runtime_ms = elapsed_ms(start);
  return r;
}

std::vector<Candidate> candidate_trace(SpectralAlgorithm algorithm, const LabeledGraph& g,
                                       const Coloring& c, const SweepConfig& cfg) {
  const EigenPair e = sweep_vector(g, c, matrix_of(algorithm), cfg.eigen);
  return is_paired(algorithm) ? paired_sweep_trace(g, c, e.vector, cfg.orderings)
                              : general_sweep_trace(g, c, e.vector, cfg.orderings);
}

}  // namespace fairdsg
