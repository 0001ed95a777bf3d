#include "fairdsg/planted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fairdsg {

void validate(const PlantedParams& p) {
  if (p.m < 2 || p.m % 2 != 0) throw Error("planted size m must be even and at least 2");
  if (p.m > p.n) throw Error("planted size m exceeds n");
  if (!(p.eps >= 0.0 && p.eps < 1.0)) throw Error("eps must lie in [0, 1)");
  if (!(p.p_bg >= 0.0 && p.p_bg <= 1.0)) throw Error("p_bg must lie in [0, 1]");
  if (!(p.d > 0.0 && p.d < static_cast<double>(p.m))) throw Error("d must lie in (0, m)");
}

namespace {

constexpr int kRetries = 50;

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

// Integer degrees in [(1-eps)d, (1+eps)d] with an even sum.
std::vector<std::uint32_t> draw_degrees(const PlantedParams& p, Rng& rng) {
  const auto lo = static_cast<std::int64_t>(std::ceil((1.0 - p.eps) * p.d - 1e-9));
  const auto hi = std::min(static_cast<std::int64_t>(std::floor((1.0 + p.eps) * p.d + 1e-9)),
                           static_cast<std::int64_t>(p.m) - 1);
  if (lo > hi || hi < 1) {
    throw Error("no integer degree in [(1-eps)d, (1+eps)d] fits a planted set of size " +
                std::to_string(p.m));
  }
  std::vector<std::uint32_t> deg(p.m);
  std::int64_t sum = 0;
  for (auto& k : deg) {
    k = static_cast<std::uint32_t>(lo + static_cast<std::int64_t>(rng.below(
                                            static_cast<std::uint64_t>(hi - lo + 1))));
    sum += k;
  }
  if (sum % 2 != 0) {
    // m is even, so a range of width zero always has an even sum.
    for (auto& k : deg) {
      if (k < hi) {
        ++k;
        break;
      }
      if (k > lo) {
        --k;
        break;
      }
    }
  }
  return deg;
}

// Configuration model on local ids 0..m-1, then loops and repeated pairs are
// removed by double-edge swaps that keep every degree. Empty on failure.
std::vector<std::pair<std::uint32_t, std::uint32_t>> configuration_model(
    const std::vector<std::uint32_t>& deg, Rng& rng) {
  const auto m = static_cast<std::uint32_t>(deg.size());
  if (std::all_of(deg.begin(), deg.end(), [&](std::uint32_t k) { return k == m - 1; })) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> complete;
    for (std::uint32_t a = 0; a < m; ++a) {
      for (std::uint32_t b = a + 1; b < m; ++b) complete.emplace_back(a, b);
    }
    return complete;
  }
  std::vector<std::uint32_t> stubs;
  for (std::uint32_t u = 0; u < m; ++u) stubs.insert(stubs.end(), deg[u], u);
  rng.shuffle(std::span(stubs));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(stubs.size() / 2);
  std::unordered_map<std::uint64_t, int> count;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    edges.emplace_back(stubs[i], stubs[i + 1]);
    ++count[pair_key(stubs[i], stubs[i + 1])];
  }
  auto bad = [&](const std::pair<std::uint32_t, std::uint32_t>& e) {
    return e.first == e.second || count[pair_key(e.first, e.second)] > 1;
  };
  std::vector<std::size_t> defects;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (bad(edges[i])) defects.push_back(i);
  }
  std::size_t budget = 200 * edges.size() + 1000;
  while (!defects.empty() && budget-- > 0) {
    const std::size_t i = defects.back();
    if (!bad(edges[i])) {
      defects.pop_back();
      continue;
    }
    const std::size_t j = rng.below(edges.size());
    if (j == i) continue;
    auto [a, b] = edges[i];
    auto [x, y] = edges[j];
    if (rng.bernoulli(0.5)) std::swap(x, y);
    // (a,b),(x,y) -> (a,x),(b,y)
    if (a == x || b == y) continue;
    if (count[pair_key(a, x)] > 0 || count[pair_key(b, y)] > 0) continue;
    if (pair_key(a, x) == pair_key(b, y)) continue;
    --count[pair_key(a, b)];
    --count[pair_key(x, y)];
    ++count[pair_key(a, x)];
    ++count[pair_key(b, y)];
    edges[i] = {a, x};
    edges[j] = {b, y};
    if (bad(edges[j])) defects.push_back(j);
  }
  if (!defects.empty()) return {};
  return edges;
}

PlantedMeasurements measure(const LabeledGraph& g, const NodeSet& planted,
                            const EigenSettings& settings) {
  PlantedMeasurements r;
  r.d_max = g.max_degree();
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (NodeId u : planted) {
    double inside = 0.0;
    for (const Neighbor& nb : g.neighbors(u)) {
      if (planted.contains(nb.node)) inside += nb.weight;
    }
    lo = std::min(lo, inside);
    hi = std::max(hi, inside);
  }
  r.min_internal_degree = lo;
  r.max_internal_degree = hi;

  // eps(d) = max(1 - lo/d, hi/d - 1) and theta(d) = 1 - d/d_max. The sum
  // falls until d = (lo+hi)/2 and is then minimized at sqrt(lo * d_max).
  double d = 0.5 * (lo + hi);
  const double root = std::sqrt(lo * r.d_max);
  if (root > d) d = std::min(root, r.d_max);
  r.d = d;
  r.eps = d > 0.0 ? std::max(1.0 - lo / d, hi / d - 1.0) : 1.0;
  r.theta = r.d_max > 0.0 ? 1.0 - d / r.d_max : 0.0;
  if (r.theta <= 0.0) {
    r.theta = 0.0;
    r.theta_clamped = true;
  }

  const SpectralProfile sp = spectral_profile(g, settings);
  r.lambda1 = sp.lambda1;
  r.lambda2 = sp.lambda2;
  r.lambda_n = sp.lambda_n;
  r.lambda = sp.lambda;
  r.expander_margin = sp.lambda1 - 4.0 * sp.lambda;
  r.gap_margin = sp.lambda1 - 4.0 * sp.lambda2;
  r.hypotheses_hold = r.expander_margin >= 0.0;
  return r;
}

}  // namespace

PlantedInstance generate(const PlantedParams& params, const EigenSettings& settings) {
  validate(params);
  Rng rng(params.seed);
  const std::size_t n = params.n;
  const std::size_t m = params.m;

  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  rng.shuffle(std::span(ids));
  std::vector<NodeId> planted_ids(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(m));
  std::sort(planted_ids.begin(), planted_ids.end());

  std::vector<std::pair<std::uint32_t, std::uint32_t>> internal;
  for (int attempt = 0; attempt < kRetries && internal.empty(); ++attempt) {
    internal = configuration_model(draw_degrees(params, rng), rng);
  }
  if (internal.empty()) {
    throw Error("could not realize a (d, eps)-regular planted graph within " +
                std::to_string(kRetries) + " attempts");
  }

  std::vector<char> in_planted(n, 0);
  for (NodeId u : planted_ids) in_planted[u] = 1;

  std::vector<Edge> edges;
  edges.reserve(internal.size());
  for (auto [a, b] : internal) edges.push_back({planted_ids[a], planted_ids[b], 1.0});
  if (params.p_bg > 0.0) {
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (in_planted[u] && in_planted[v]) continue;
        if (rng.bernoulli(params.p_bg)) edges.push_back({u, v, 1.0});
      }
    }
  }

  std::vector<Color> colors(n, Color::Red);
  std::vector<NodeId> shuffled = planted_ids;
  rng.shuffle(std::span(shuffled));
  for (std::size_t i = 0; i < m / 2; ++i) colors[shuffled[i]] = Color::Blue;
  bool red = true;
  for (NodeId u = 0; u < n; ++u) {
    if (in_planted[u]) continue;
    colors[u] = red ? Color::Red : Color::Blue;
    red = !red;
  }

  PlantedInstance inst;
  inst.graph = LabeledGraph::from_edges(n, std::move(edges));
  inst.coloring = Coloring(std::move(colors));
  inst.planted = NodeSet(std::move(planted_ids));
  inst.measured = measure(inst.graph, inst.planted, settings);
  return inst;
}

std::size_t recovery_error(const NodeSet& planted, const NodeSet& recovered) {
  std::size_t missing = 0;
  for (NodeId u : planted) {
    if (!recovered.contains(u)) ++missing;
  }
  return missing;
}

RecoveryReport recovery_experiment(const PlantedInstance& inst, SpectralAlgorithm algorithm,
                                   DeltaPolicy policy, const EigenSettings& settings) {
  const PlantedMeasurements& pm = inst.measured;
  const double slack = pm.eps + pm.theta;
  const auto m = static_cast<double>(inst.planted.size());

  RecoveryReport r;
  r.measured = pm;
  r.vacuous = !pm.hypotheses_hold;
  r.delta = policy.kind == DeltaPolicy::Kind::Theoretical ? 16.0 * slack : policy.value;
  r.error_bound = 16.0 * slack * m;
  r.chi_bound = 4.0 * slack;

  const ProjectedOperator b(inst.graph, FairnessVector(inst.coloring));
  EigenPair top = dominant_eigenpair(b, settings);
  r.lambda_hat1 = top.value;
  r.lambda_hat2 = second_eigenvalue(b, top, settings).value;

  const std::vector<double> chi = inst.planted.indicator(inst.graph.num_nodes());
  std::vector<double> vhat = top.vector;
  if (dot(chi, vhat) < 0.0) {
    for (double& x : vhat) x = -x;
  }
  double dist = 0.0;
  for (std::size_t i = 0; i < chi.size(); ++i) dist += (chi[i] - vhat[i]) * (chi[i] - vhat[i]);
  r.chi_distance_sq = dist;

  const double cutoff = 1.0 / (2.0 * std::sqrt(m));
  for (std::size_t i = 0; i < vhat.size(); ++i) {
    const bool above = vhat[i] >= cutoff;
    if (above != inst.planted.contains(static_cast<NodeId>(i))) ++r.threshold_misclassified;
  }

  const bool projected =
      algorithm == SpectralAlgorithm::FSS || algorithm == SpectralAlgorithm::FPS;
  const std::vector<double> v =
      projected ? vhat
                : dominant_eigenpair(AdjacencyOperator(inst.graph), settings).vector;
  const SolutionRecord rec =
      algorithm == SpectralAlgorithm::SS || algorithm == SpectralAlgorithm::FSS
          ? general_sweep(inst.graph, inst.coloring, v, r.delta)
          : paired_sweep(inst.graph, inst.coloring, v);
  r.recovered_size = rec.size;
  r.recovered_density = rec.density;
  r.error = recovery_error(inst.planted, rec.nodes);

  r.recovery_passed = static_cast<double>(r.error) <= r.error_bound;
  // Slack for the eigenvector's own solve error; the bound is 0 on a pure clique.
  r.projection_passed = r.chi_distance_sq <= r.chi_bound + 1e-9;
  r.threshold_passed = static_cast<double>(r.threshold_misclassified) <= r.error_bound;
  return r;
}

RecoveryReport recovery_experiment(const PlantedParams& params, SpectralAlgorithm algorithm,
                                   DeltaPolicy policy, const EigenSettings& settings) {
  return recovery_experiment(generate(params, settings), algorithm, policy, settings);
}

LabeledGraph gnp_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v, 1.0});
    }
  }
  return LabeledGraph::from_edges(n, std::move(edges));
}

}  // namespace fairdsg
