#include "fairdsg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fairdsg/random.hpp"

namespace fairdsg {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

namespace {

void check_size(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got));
  }
}

void adjacency_times(const LabeledGraph& g, std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<NodeId>(g.num_nodes());
  for (NodeId u = 0; u < n; ++u) {
    double s = 0.0;
    for (const Neighbor& nb : g.neighbors(u)) s += nb.weight * x[nb.node];
    y[u] = s;
  }
}

void normalize(std::span<double> x) {
  const double nx = norm(x);
  for (double& v : x) v /= nx;
}

// Flip so that the first entry that is not numerical noise is positive.
void fix_sign(std::span<double> v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  const double threshold = 1e-10 * scale;
  for (double x : v) {
    if (std::abs(x) > threshold) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

EigenPair power_iteration(const SymmetricOperator& op, const EigenSettings& settings,
                          std::span<const double> deflate) {
  if (!(settings.tol > 0.0)) throw Error("eigensolver tolerance must be positive");
  const std::size_t n = op.size();
  if (n == 0) throw Error("eigensolver needs at least one node");
  const double c = op.shift();

  std::vector<double> x = random_unit_vector(n, settings.seed);
  auto orthogonalize = [&](std::span<double> v) {
    if (deflate.empty()) return;
    const double p = dot(v, deflate);
    for (std::size_t i = 0; i < n; ++i) v[i] -= p * deflate[i];
  };
  orthogonalize(x);
  if (norm(x) == 0.0) {
    // The seeded vector was parallel to the deflated direction; any basis
    // vector not parallel to it will do.
    for (std::size_t i = 0; i < n && norm(x) == 0.0; ++i) {
      std::fill(x.begin(), x.end(), 0.0);
      x[i] = 1.0;
      orthogonalize(x);
    }
    if (norm(x) == 0.0) throw Error("deflated space is empty");
  }
  normalize(x);

  std::vector<double> y(n);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= settings.max_iters; ++it) {
    op.apply(x, y);
    orthogonalize(y);
    const double lambda = dot(x, y);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = y[i] - lambda * x[i];
      r2 += d * d;
    }
    const double residual = std::sqrt(r2);
    const double relative = residual / std::max(std::abs(lambda), 1.0);
    best = std::min(best, relative);
    if (relative <= settings.tol) {
      EigenPair pair;
      pair.value = lambda;
      pair.vector = std::move(x);
      pair.residual = residual;
      pair.relative_residual = relative;
      pair.iterations = it;
      fix_sign(pair.vector);
      return pair;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] + c * x[i];
    orthogonalize(x);
    normalize(x);
  }
  throw ConvergenceError(best, settings.max_iters);
}

}  // namespace

FairnessVector::FairnessVector(const Coloring& c) {
  const std::size_t n = c.size();
  if (n == 0) throw Error("fairness vector needs at least one node");
  const double v = 1.0 / std::sqrt(static_cast<double>(n));
  entries_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    entries_[i] = c[static_cast<NodeId>(i)] == Color::Red ? v : -v;
  }
}

double FairnessVector::dot(std::span<const double> x) const {
  check_size(entries_.size(), x.size());
  return fairdsg::dot(entries_, x);
}

void FairnessVector::project_out(std::span<double> x) const {
  const double p = dot(x);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= p * entries_[i];
}

void AdjacencyOperator::apply(std::span<const double> x, std::span<double> y) const {
  check_size(size(), x.size());
  check_size(size(), y.size());
  adjacency_times(*graph_, x, y);
}

void ReflectedAdjacencyOperator::apply(std::span<const double> x, std::span<double> y) const {
  check_size(size(), x.size());
  check_size(size(), y.size());
  adjacency_times(*graph_, x, y);
  const double d = graph_->max_degree();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = d * x[i] - y[i];
}

ProjectedOperator::ProjectedOperator(const LabeledGraph& g, FairnessVector f,
                                     std::optional<double> shift)
    : graph_(&g), fairness_(std::move(f)), shift_(shift.value_or(g.max_degree())) {
  check_size(g.num_nodes(), fairness_.size());
  if (!(shift_ >= 0.0)) throw Error("operator shift must be non-negative");
}

void ProjectedOperator::apply(std::span<const double> x, std::span<double> y) const {
  check_size(size(), x.size());
  check_size(size(), y.size());
  std::vector<double> px(x.begin(), x.end());
  fairness_.project_out(px);
  adjacency_times(*graph_, px, y);
  fairness_.project_out(y);
}

std::vector<double> apply_projected(const ProjectedOperator& op, std::span<const double> x,
                                    bool with_shift) {
  check_size(op.size(), x.size());
  std::vector<double> out(x.size());
  op.apply(x, out);
  if (with_shift) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += op.shift() * x[i];
  }
  return out;
}

ConvergenceError::ConvergenceError(double best_relative_residual, std::size_t iterations)
    : Error("power iteration did not converge in " + std::to_string(iterations) +
            " iterations (best relative residual " + std::to_string(best_relative_residual) +
            ")"),
      best_(best_relative_residual),
      iterations_(iterations) {}

std::vector<double> random_unit_vector(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform() - 0.5;
  if (norm(x) == 0.0) x.assign(n, 1.0);
  normalize(x);
  return x;
}

EigenPair dominant_eigenpair(const SymmetricOperator& op, const EigenSettings& settings) {
  return power_iteration(op, settings, {});
}

EigenPair second_eigenvalue(const SymmetricOperator& op, const EigenPair& first,
                            const EigenSettings& settings) {
  check_size(op.size(), first.vector.size());
  if (op.size() < 2) throw Error("second eigenvalue needs at least two nodes");
  return power_iteration(op, settings, first.vector);
}

SpectralProfile spectral_profile(const LabeledGraph& g, const EigenSettings& settings) {
  if (g.num_nodes() < 2) throw Error("spectral profile needs at least two nodes");
  AdjacencyOperator a(g);
  const EigenPair top = dominant_eigenpair(a, settings);
  const EigenPair second = second_eigenvalue(a, top, settings);
  ReflectedAdjacencyOperator reflected(g);
  const EigenPair bottom = dominant_eigenpair(reflected, settings);

  SpectralProfile p;
  p.lambda1 = top.value;
  p.lambda2 = second.value;
  p.lambda_n = g.max_degree() - bottom.value;
  p.lambda = std::max(p.lambda2, std::abs(p.lambda_n));
  return p;
}

}  // namespace fairdsg
