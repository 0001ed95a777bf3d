#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "fairdsg/graph.hpp"
#include "fairdsg/sweep.hpp"

namespace fairdsg {

inline constexpr const char* kToolVersion = "0.1.0";

struct ParetoPoint {
  double density = 0.0;
  double balance = 0.0;
  std::size_t size = 0;
  std::string algorithm;
};

// p dominates q: no worse in both coordinates, strictly better in one.
bool dominates(const ParetoPoint& p, const ParetoPoint& q);

/// Non-dominated points, by descending density (ties by descending
/// balance). Points sharing (density, balance) collapse to the smallest
/// size, then the algorithm name that sorts first.
std::vector<ParetoPoint> pareto_front(std::vector<ParetoPoint> points);

// record.density / optimum; 0 for anything that is not a found fair set.
double normalized_density(const SolutionRecord& record, double optimum);
// Same, with the optimum from exact_densest_subgraph(g). Throws if it is 0.
double normalized_density(const SolutionRecord& record, const LabeledGraph& g);

struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::string algorithm;
  double delta = 0.0;
  double tol = 0.0;
  std::size_t max_iters = 0;
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
};

// '#'-prefixed key: value lines; readers skip them.
void write_manifest(std::ostream& out, const RunManifest& m);

struct RunRow {
  std::string algorithm;
  std::string instance;
  std::size_t n = 0;
  std::size_t n_red = 0;
  std::size_t n_blue = 0;
  std::size_t edges = 0;
  std::size_t sol_size = 0;
  std::size_t sol_red = 0;
  std::size_t sol_blue = 0;
  double density = 0.0;
  double balance = 0.0;
  double normalized_density = 0.0;
  bool fair = false;
  Status status = Status::NoFeasiblePrefix;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
};

RunRow make_row(const SolutionRecord& record, std::string instance, const LabeledGraph& g,
                const Coloring& c, double optimum, std::uint64_t seed);

// Fixed 9 significant digits.
std::string format_real(double x);

extern const char* const kRunCsvHeader;

void write_runs_csv(std::ostream& out, const std::vector<RunRow>& rows);
// Skips leading '#' lines; throws ParseError on a bad header or row.
std::vector<RunRow> read_runs_csv(std::istream& in);

void write_pareto_csv(std::ostream& out, const std::vector<ParetoPoint>& points);

struct AlgorithmSummary {
  std::string algorithm;
  std::size_t runs = 0;
  std::size_t unfair = 0;  // status Unfair or NoFeasiblePrefix, or not fair
  double percent_unfair = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
};

/// Per algorithm in order of first appearance. Quartiles of normalized
/// density use linear interpolation between order statistics.
std::vector<AlgorithmSummary> summarize(const std::vector<RunRow>& rows);

void write_summary_csv(std::ostream& out, const std::vector<AlgorithmSummary>& s);
void write_summary_table(std::ostream& out, const std::vector<AlgorithmSummary>& s);

// Linear-interpolation quantile of an unsorted sample; q in [0, 1].
double quantile(std::vector<double> sample, double q);

// RFC 4180 field splitting and quoting.
std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no);
std::string csv_field(const std::string& s);

}  // namespace fairdsg
