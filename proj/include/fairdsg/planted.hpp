#pragma once

#include <cstddef>
#include <cstdint>

#include "fairdsg/graph.hpp"
#include "fairdsg/random.hpp"
#include "fairdsg/spectral.hpp"
#include "fairdsg/sweep.hpp"

namespace fairdsg {

struct PlantedParams {
  std::size_t n = 2000;
  std::size_t m = 200;  // planted size, even
  double d = 40.0;      // target internal degree, d < m
  double eps = 0.1;     // internal degrees drawn from [(1-eps)d, (1+eps)d]
  double p_bg = 0.004;  // probability of every pair not inside the planted set
  std::uint64_t seed = 0;
};

// Throws Error naming the first violated constraint.
void validate(const PlantedParams& params);

/// Hypothesis measurements taken on the realized graph.
///
/// `d` is the regularity center that minimizes eps + theta among all valid
/// choices; eps and theta then follow from the realized internal degrees
/// and from d_max.
struct PlantedMeasurements {
  double d_max = 0.0;
  double d = 0.0;
  double eps = 0.0;
  double theta = 0.0;
  bool theta_clamped = false;  // d >= d_max, theta reported as 0
  double min_internal_degree = 0.0;
  double max_internal_degree = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_n = 0.0;
  double lambda = 0.0;
  double expander_margin = 0.0;  // lambda1 - 4 lambda
  double gap_margin = 0.0;       // lambda1 - 4 lambda2
  bool hypotheses_hold = false;  // lambda1 >= 4 lambda
};

struct PlantedInstance {
  LabeledGraph graph;
  Coloring coloring;
  NodeSet planted;
  PlantedMeasurements measured;
};

/// Planted fair set of m random nodes (m/2 red, m/2 blue) whose internal
/// edges come from a configuration model on degrees drawn from
/// [(1-eps)d, (1+eps)d], with loops and multi-edges repaired by degree
/// preserving swaps. Every other pair is an edge with probability p_bg.
/// Remaining nodes are colored red/blue alternately by id. Deterministic in
/// the seed. Throws Error when no valid planted graph is found within the
/// retry budget.
PlantedInstance generate(const PlantedParams& params, const EigenSettings& settings = {});

// |planted \ recovered|
std::size_t recovery_error(const NodeSet& planted, const NodeSet& recovered);

struct DeltaPolicy {
  enum class Kind { Theoretical, Fixed };
  Kind kind = Kind::Theoretical;  // 16 (eps + theta)
  double value = 0.0;

  static DeltaPolicy theoretical() { return {Kind::Theoretical, 0.0}; }
  static DeltaPolicy fixed(double delta) { return {Kind::Fixed, delta}; }
};

struct RecoveryReport {
  PlantedMeasurements measured;
  bool vacuous = false;  // hypotheses fail; bounds are reported but not claimed
  double delta = 0.0;
  double lambda_hat1 = 0.0;
  double lambda_hat2 = 0.0;
  std::size_t recovered_size = 0;
  double recovered_density = 0.0;
  std::size_t error = 0;
  double error_bound = 0.0;  // 16 (eps + theta) m
  std::size_t threshold_misclassified = 0;  // entries on the wrong side of 1/(2 sqrt m)
  double chi_distance_sq = 0.0;             // ||chi - v_hat1||^2, sign aligned
  double chi_bound = 0.0;                   // 4 (eps + theta)
  bool recovery_passed = false;
  bool projection_passed = false;
  bool threshold_passed = false;
  bool passed() const { return recovery_passed && projection_passed && threshold_passed; }
};

RecoveryReport recovery_experiment(const PlantedInstance& instance,
                                   SpectralAlgorithm algorithm = SpectralAlgorithm::FSS,
                                   DeltaPolicy policy = DeltaPolicy::theoretical(),
                                   const EigenSettings& settings = {});

RecoveryReport recovery_experiment(const PlantedParams& params,
                                   SpectralAlgorithm algorithm = SpectralAlgorithm::FSS,
                                   DeltaPolicy policy = DeltaPolicy::theoretical(),
                                   const EigenSettings& settings = {});

// G(n, p) with unit weights.
LabeledGraph gnp_graph(std::size_t n, double p, Rng& rng);

}  // namespace fairdsg
