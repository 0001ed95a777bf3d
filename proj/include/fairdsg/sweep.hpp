#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairdsg/graph.hpp"
#include "fairdsg/spectral.hpp"

namespace fairdsg {

enum class Ordering { NonIncreasing, NonDecreasing, AbsNonIncreasing, AbsNonDecreasing };

// Enumeration order also decides ties between orderings.
inline constexpr std::array<Ordering, 4> kAllOrderings = {
    Ordering::NonIncreasing, Ordering::NonDecreasing, Ordering::AbsNonIncreasing,
    Ordering::AbsNonDecreasing};

std::string_view to_string(Ordering o);

enum class MatrixKind { Raw, Projected };

enum class Status { Found, NoFeasiblePrefix, Unfair };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

enum class SpectralAlgorithm { SS, FSS, PS, FPS };

std::string_view to_string(SpectralAlgorithm a);

struct SweepConfig {
  MatrixKind matrix = MatrixKind::Projected;
  double delta = 0.0;
  EigenSettings eigen;
  // Pass {NonIncreasing} alone for the single-ordering sweep.
  std::vector<Ordering> orderings{kAllOrderings.begin(), kAllOrderings.end()};
};

/// Outcome of one algorithm run. Every numeric field is recomputed from
/// `nodes` by make_record(); `fair` is set only for a found, balanced set.
struct SolutionRecord {
  std::string algorithm;
  NodeSet nodes;
  double density = 0.0;
  double balance = 0.0;
  std::int64_t imbalance = 0;
  bool fair = false;
  std::size_t size = 0;
  std::size_t n_red = 0;
  std::size_t n_blue = 0;
  double runtime_ms = 0.0;
  Status status = Status::NoFeasiblePrefix;
};

SolutionRecord make_record(std::string algorithm, const LabeledGraph& g, const Coloring& c,
                           NodeSet nodes, Status status);

// One prefix (or pair-prefix) examined by a sweep.
struct Candidate {
  Ordering ordering;
  std::size_t size;
  double density;
  double balance;
};

// Node ids sorted by the ordering's key; stable, so equal keys keep ascending id.
std::vector<NodeId> sweep_order(std::span<const double> v, Ordering ordering,
                                std::span<const NodeId> nodes);

/// Scans every prefix of every ordering and keeps the densest one with
/// imbalance <= delta * |S|. Ties: smaller set, then earlier ordering.
SolutionRecord general_sweep(const LabeledGraph& g, const Coloring& c, std::span<const double> v,
                             double delta,
                             std::span<const Ordering> orderings = kAllOrderings);

/// Sorts red and blue nodes separately and scans the sets made of the top s
/// nodes of each color. Always fair; NoFeasiblePrefix only without one color.
SolutionRecord paired_sweep(const LabeledGraph& g, const Coloring& c, std::span<const double> v,
                            std::span<const Ordering> orderings = kAllOrderings);

// Dominant eigenvector of A (Raw) or of the fairness-projected operator.
EigenPair sweep_vector(const LabeledGraph& g, const Coloring& c, MatrixKind matrix,
                       const EigenSettings& settings);

/// SS and FSS sweep the eigenvector of A and B with cfg.delta (0 in the
/// standard setting); PS and FPS pair-sweep the same vectors. cfg.matrix is
/// ignored here since the algorithm fixes it.
SolutionRecord run_algorithm(SpectralAlgorithm algorithm, const LabeledGraph& g,
                             const Coloring& c, const SweepConfig& cfg = {});

// Every candidate the algorithm examines, in scan order.
std::vector<Candidate> candidate_trace(SpectralAlgorithm algorithm, const LabeledGraph& g,
                                       const Coloring& c, const SweepConfig& cfg = {});

std::vector<Candidate> general_sweep_trace(const LabeledGraph& g, const Coloring& c,
                                           std::span<const double> v,
                                           std::span<const Ordering> orderings = kAllOrderings);
std::vector<Candidate> paired_sweep_trace(const LabeledGraph& g, const Coloring& c,
                                          std::span<const double> v,
                                          std::span<const Ordering> orderings = kAllOrderings);

}  // namespace fairdsg
