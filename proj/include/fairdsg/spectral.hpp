#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fairdsg/error.hpp"
#include "fairdsg/graph.hpp"

namespace fairdsg {

/// Unit vector with +1/sqrt(n) on red nodes and -1/sqrt(n) on blue nodes.
/// A vector x satisfies the balance constraint exactly when dot(x) == 0.
class FairnessVector {
 public:
  FairnessVector() = default;
  explicit FairnessVector(const Coloring& c);

  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const double> entries() const noexcept { return entries_; }
  double operator[](std::size_t i) const { return entries_[i]; }
  double dot(std::span<const double> x) const;
  // x <- x - (f.x) f
  void project_out(std::span<double> x) const;

 private:
  std::vector<double> entries_;
};

inline FairnessVector fairness_vector(const Coloring& c) { return FairnessVector(c); }

/// Symmetric linear operator applied matrix-free.
///
/// shift() is a constant c such that operator + c*I has a non-negative
/// spectrum; power iteration runs on the shifted operator so that the
/// algebraically largest eigenvalue is also the largest in magnitude.
class SymmetricOperator {
 public:
  virtual ~SymmetricOperator() = default;
  virtual std::size_t size() const = 0;
  // y <- Op x (unshifted). |x| == |y| == size().
  virtual void apply(std::span<const double> x, std::span<double> y) const = 0;
  virtual double shift() const = 0;
};

// The weighted adjacency matrix A.
class AdjacencyOperator final : public SymmetricOperator {
 public:
  explicit AdjacencyOperator(const LabeledGraph& g) : graph_(&g) {}
  explicit AdjacencyOperator(LabeledGraph&&) = delete;
  std::size_t size() const override { return graph_->num_nodes(); }
  void apply(std::span<const double> x, std::span<double> y) const override;
  double shift() const override { return graph_->max_degree(); }

 private:
  const LabeledGraph* graph_;
};

// d_max*I - A. Its top eigenvalue is d_max - lambda_n(A).
class ReflectedAdjacencyOperator final : public SymmetricOperator {
 public:
  explicit ReflectedAdjacencyOperator(const LabeledGraph& g) : graph_(&g) {}
  explicit ReflectedAdjacencyOperator(LabeledGraph&&) = delete;
  std::size_t size() const override { return graph_->num_nodes(); }
  void apply(std::span<const double> x, std::span<double> y) const override;
  double shift() const override { return 0.0; }

 private:
  const LabeledGraph* graph_;
};

/// B = (I - ff^T) A (I - ff^T), never materialized.
class ProjectedOperator final : public SymmetricOperator {
 public:
  // Shift defaults to d_max of the graph.
  ProjectedOperator(const LabeledGraph& g, FairnessVector f, std::optional<double> shift = {});
  ProjectedOperator(LabeledGraph&&, FairnessVector, std::optional<double> = {}) = delete;

  std::size_t size() const override { return graph_->num_nodes(); }
  void apply(std::span<const double> x, std::span<double> y) const override;
  double shift() const override { return shift_; }

  const FairnessVector& fairness() const noexcept { return fairness_; }
  const LabeledGraph& graph() const noexcept { return *graph_; }

 private:
  const LabeledGraph* graph_;
  FairnessVector fairness_;
  double shift_;
};

/// B x, plus shift*x when with_shift is set. Throws on a dimension mismatch.
std::vector<double> apply_projected(const ProjectedOperator& op, std::span<const double> x,
                                    bool with_shift);

struct EigenSettings {
  double tol = 1e-8;  // on ||Op v - lambda v|| / max(|lambda|, 1)
  std::size_t max_iters = 100000;
  std::uint64_t seed = 0;
};

struct EigenPair {
  double value = 0.0;          // eigenvalue of the unshifted operator
  std::vector<double> vector;  // unit norm, first non-negligible entry positive
  double residual = 0.0;       // ||Op v - value v||
  double relative_residual = 0.0;
  std::size_t iterations = 0;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(double best_relative_residual, std::size_t iterations);
  double best_relative_residual() const noexcept { return best_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double best_;
  std::size_t iterations_;
};

/// Largest algebraic eigenpair by shifted power iteration.
EigenPair dominant_eigenpair(const SymmetricOperator& op, const EigenSettings& settings = {});

/// Second largest algebraic eigenpair: power iteration with every iterate
/// re-orthogonalized against first.vector.
EigenPair second_eigenvalue(const SymmetricOperator& op, const EigenPair& first,
                            const EigenSettings& settings = {});

struct SpectralProfile {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_n = 0.0;
  double lambda = 0.0;  // max(lambda2, |lambda_n|)
};

// Throws Error for n < 2, ConvergenceError if any solve stalls.
SpectralProfile spectral_profile(const LabeledGraph& g, const EigenSettings& settings = {});

// Deterministic pseudo-random unit vector of length n.
std::vector<double> random_unit_vector(std::size_t n, std::uint64_t seed);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

}  // namespace fairdsg
