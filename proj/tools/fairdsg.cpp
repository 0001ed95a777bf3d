// fairdsg: ingest datasets, run the densest-subgraph algorithms, and emit
// plot-ready CSV files.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fairdsg/amazon.hpp"
#include "fairdsg/densest.hpp"
#include "fairdsg/edge_list.hpp"
#include "fairdsg/gml.hpp"
#include "fairdsg/oracle.hpp"
#include "fairdsg/planted.hpp"
#include "fairdsg/report.hpp"
#include "fairdsg/sweep.hpp"

namespace fs = std::filesystem;
using namespace fairdsg;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::vector<std::string> inputs;
  std::string out;
  std::string algorithm;  // empty: the command's default
  double delta = 0.0;
  double tol = 1e-8;
  std::size_t max_iters = 100000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t min_nodes = 100;
  bool record_timing = false;
};

EigenSettings eigen_settings(const Common& o) {
  EigenSettings s;
  s.tol = o.tol;
  s.max_iters = o.max_iters;
  s.seed = o.seed;
  return s;
}

RunManifest manifest(const std::string& command, const Common& o) {
  RunManifest m;
  m.command = command;
  m.inputs = o.inputs;
  m.algorithm = o.algorithm;
  m.delta = o.delta;
  m.tol = o.tol;
  m.max_iters = o.max_iters;
  m.seed = o.seed;
  return m;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads. Callers store
// results by index, so output order never depends on scheduling.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to --out, or stdout when it is empty.
void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error("cannot write " + out);
  f << text;
  if (!f) throw Error("error while writing " + out);
}

// Edge-list inputs; a directory contributes its *.el files in name order.
std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const std::string& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".el") found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::exists(p)) {
      out.push_back(p);
    } else {
      throw Error("input not found: " + in);
    }
  }
  if (out.empty()) throw Error("no input instances");
  return out;
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

const std::vector<std::string> kAllNames = {"ss", "fss", "ps", "fps", "2dfsg"};

std::vector<std::string> algorithm_list(const std::string& names) {
  const std::vector<std::string> known = {"ss", "fss", "ps", "fps", "2dfsg", "exact", "oracle"};
  std::vector<std::string> out;
  for (const std::string& a : split_names(names)) {
    if (a == "all") {
      out.insert(out.end(), kAllNames.begin(), kAllNames.end());
    } else if (std::find(known.begin(), known.end(), a) != known.end()) {
      out.push_back(a);
    } else {
      throw UsageError("unknown algorithm '" + a + "'");
    }
  }
  if (out.empty()) throw UsageError("--algorithm needs a value");
  return out;
}

std::optional<SpectralAlgorithm> spectral(const std::string& name) {
  if (name == "ss") return SpectralAlgorithm::SS;
  if (name == "fss") return SpectralAlgorithm::FSS;
  if (name == "ps") return SpectralAlgorithm::PS;
  if (name == "fps") return SpectralAlgorithm::FPS;
  return std::nullopt;
}

SolutionRecord run_one(const std::string& name, const LabeledGraph& g, const Coloring& c,
                       const Common& o) {
  if (const auto alg = spectral(name)) {
    SweepConfig cfg;
    cfg.delta = o.delta;
    cfg.eigen = eigen_settings(o);
    return run_algorithm(*alg, g, c, cfg);
  }
  if (name == "2dfsg") return two_dfsg(g, c);
  if (name == "exact") {
    const DensestResult r = exact_densest_subgraph(g);
    return make_record("EXACT", g, c, r.nodes, Status::Found);
  }
  const OracleResult r = brute_force_densest(g, c, OracleConstraint::fair());
  return make_record("ORACLE", g, c, r.nodes, r.feasible ? Status::Found : Status::NoFeasiblePrefix);
}

void cmd_ingest_polbooks(const Common& o) {
  if (o.inputs.size() != 1) throw UsageError("ingest-polbooks takes exactly one --input");
  const PolbooksGraph pb = polbooks_graph(parse_gml(read_file(o.inputs[0])));
  std::ostringstream out;
  write_manifest(out, manifest("ingest-polbooks", o));
  write_edge_list(out, pb.graph, pb.coloring);
  emit(o.out, out.str());
  std::cerr << "nodes " << pb.graph.num_nodes() << " edges " << pb.graph.num_edges() << " red "
            << pb.coloring.n_red() << " blue " << pb.coloring.n_blue() << " dropped_neutral "
            << pb.dropped_neutral << '\n';
}

std::string pair_file_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "pair_%05zu.el", i);
  return buf;
}

void cmd_ingest_amazon(const Common& o) {
  if (o.inputs.empty()) throw UsageError("ingest-amazon needs --input");
  if (o.out.empty()) throw UsageError("ingest-amazon needs --out <directory>");
  std::vector<ProductRecord> records;
  std::size_t malformed = 0;
  for (const std::string& in : o.inputs) {
    std::ifstream f(in, std::ios::binary);
    if (!f) throw Error("cannot open " + in);
    AmazonParse p = parse_amazon_jsonl(f);
    malformed += p.malformed;
    std::move(p.records.begin(), p.records.end(), std::back_inserter(records));
  }
  const ProductGraph pg = build_product_graph(records);
  const std::vector<CategoryPairGraph> pairs =
      category_pair_subgraphs(pg.graph, pg.categories, o.min_nodes);

  fs::create_directories(o.out);
  std::vector<std::string> texts(pairs.size());
  parallel_for(pairs.size(), o.jobs, [&](std::size_t i) {
    std::ostringstream out;
    out << "# instance: " << pairs[i].name << '\n';
    write_edge_list(out, pairs[i].graph, pairs[i].coloring);
    texts[i] = out.str();
  });
  std::ostringstream index;
  write_manifest(index, manifest("ingest-amazon", o));
  index << "# records: " << records.size() << " malformed_lines: " << malformed
        << " dangling_references: " << pg.dangling_references << '\n';
  index << "file,pair,n,n_red,n_blue,edges\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string file = pair_file_name(i);
    emit((fs::path(o.out) / file).string(), texts[i]);
    index << file << ',' << csv_field(pairs[i].name) << ',' << pairs[i].graph.num_nodes() << ','
          << pairs[i].coloring.n_red() << ',' << pairs[i].coloring.n_blue() << ','
          << pairs[i].graph.num_edges() << '\n';
  }
  emit((fs::path(o.out) / "pairs.csv").string(), index.str());
  std::cerr << "records " << records.size() << " malformed " << malformed << " products "
            << pg.graph.num_nodes() << " edges " << pg.graph.num_edges() << " subgraphs "
            << pairs.size() << '\n';
}

struct Instance {
  std::string name;
  ColoredGraph g;
};

std::vector<Instance> load_instances(const std::vector<std::string>& inputs) {
  std::vector<Instance> out;
  for (const fs::path& p : expand_inputs(inputs)) {
    try {
      out.push_back({p.stem().string(), parse_edge_list(read_file(p))});
    } catch (const ParseError& e) {
      throw ParseError(p.string() + ": " + e.what(), 0);
    }
  }
  return out;
}

void cmd_run(const Common& o) {
  const std::vector<std::string> algorithms = algorithm_list(o.algorithm);
  const std::vector<Instance> instances = load_instances(o.inputs);
  std::vector<std::vector<RunRow>> rows(instances.size());
  parallel_for(instances.size(), o.jobs, [&](std::size_t i) {
    const LabeledGraph& g = instances[i].g.graph;
    const Coloring& c = instances[i].g.coloring;
    const double optimum = g.num_nodes() > 0 ? exact_densest_subgraph(g).density : 0.0;
    for (const std::string& a : algorithms) {
      SolutionRecord r = run_one(a, g, c, o);
      if (!o.record_timing) r.runtime_ms = 0.0;
      rows[i].push_back(make_row(r, instances[i].name, g, c, optimum, o.seed));
    }
  });
  std::vector<RunRow> flat;
  for (auto& r : rows) std::move(r.begin(), r.end(), std::back_inserter(flat));
  std::ostringstream out;
  write_manifest(out, manifest("run", o));
  write_runs_csv(out, flat);
  emit(o.out, out.str());
}

struct PlantedOptions {
  std::size_t n = 2000;
  std::size_t m = 200;
  double d = 40.0;
  double eps = 0.1;
  double p_bg = 0.004;
  std::size_t seeds = 1;
  std::size_t max_resamples = 20;
  std::optional<double> fixed_delta;
  std::string save_dir;
};

void cmd_planted(const Common& o, const PlantedOptions& p) {
  const auto alg = spectral(o.algorithm);
  if (!alg) throw UsageError("planted needs a spectral --algorithm (ss, fss, ps, fps)");
  const EigenSettings settings = eigen_settings(o);
  const DeltaPolicy policy = p.fixed_delta ? DeltaPolicy::fixed(*p.fixed_delta) : DeltaPolicy::theoretical();

  struct Row {
    std::uint64_t seed = 0;
    std::size_t attempts = 0;
    RecoveryReport report;
    std::string instance_text;
  };
  std::vector<Row> rows(p.seeds);
  parallel_for(p.seeds, o.jobs, [&](std::size_t i) {
    // Seeds for slot i are drawn from a disjoint range so slots never share one.
    const std::uint64_t base = o.seed + i * (p.max_resamples + 1);
    for (std::size_t k = 0; k <= p.max_resamples; ++k) {
      PlantedParams params{p.n, p.m, p.d, p.eps, p.p_bg, base + k};
      PlantedInstance inst = generate(params, settings);
      if (!inst.measured.hypotheses_hold && k < p.max_resamples) continue;
      rows[i].seed = params.seed;
      rows[i].attempts = k + 1;
      rows[i].report = recovery_experiment(inst, *alg, policy, settings);
      if (!p.save_dir.empty()) rows[i].instance_text = edge_list_string(inst.graph, inst.coloring);
      break;
    }
  });

  std::ostringstream out;
  write_manifest(out, manifest("planted", o));
  out << "seed,attempts,n,m,d_target,eps_target,p_bg,d_max,d,eps,theta,theta_clamped,lambda1,lambda2,"
         "lambda_n,lambda,expander_margin,gap_margin,hypotheses_hold,vacuous,algorithm,delta,"
         "lambda_hat1,lambda_hat2,recovered_size,recovered_density,error,error_bound,"
         "recovery_margin,chi_distance_sq,chi_bound,projection_margin,threshold_misclassified,"
         "recovery_passed,projection_passed,threshold_passed\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const Row& r : rows) {
    const RecoveryReport& x = r.report;
    const PlantedMeasurements& m = x.measured;
    out << r.seed << ',' << r.attempts << ',' << p.n << ',' << p.m << ',' << format_real(p.d) << ','
        << format_real(p.eps) << ',' << format_real(p.p_bg) << ',' << format_real(m.d_max) << ','
        << format_real(m.d) << ',' << format_real(m.eps) << ',' << format_real(m.theta) << ','
        << flag(m.theta_clamped) << ',' << format_real(m.lambda1) << ',' << format_real(m.lambda2)
        << ',' << format_real(m.lambda_n) << ',' << format_real(m.lambda) << ','
        << format_real(m.expander_margin) << ',' << format_real(m.gap_margin) << ','
        << flag(m.hypotheses_hold) << ',' << flag(x.vacuous) << ',' << to_string(*alg) << ','
        << format_real(x.delta) << ',' << format_real(x.lambda_hat1) << ','
        << format_real(x.lambda_hat2) << ',' << x.recovered_size << ','
        << format_real(x.recovered_density) << ',' << x.error << ',' << format_real(x.error_bound)
        << ',' << format_real(x.error_bound - static_cast<double>(x.error)) << ','
        << format_real(x.chi_distance_sq) << ',' << format_real(x.chi_bound) << ','
        << format_real(x.chi_bound - x.chi_distance_sq) << ',' << x.threshold_misclassified << ','
        << flag(x.recovery_passed) << ',' << flag(x.projection_passed) << ','
        << flag(x.threshold_passed) << '\n';
  }
  emit(o.out, out.str());
  if (!p.save_dir.empty()) {
    fs::create_directories(p.save_dir);
    for (const Row& r : rows) {
      emit((fs::path(p.save_dir) / ("planted_" + std::to_string(r.seed) + ".el")).string(),
           r.instance_text);
    }
  }
}

void cmd_pareto(const Common& o) {
  const std::vector<std::string> algorithms = algorithm_list(o.algorithm);
  const std::vector<Instance> instances = load_instances(o.inputs);
  std::ostringstream out;
  write_manifest(out, manifest("pareto", o));
  out << "instance,";
  std::ostringstream body;
  for (const Instance& inst : instances) {
    const LabeledGraph& g = inst.g.graph;
    const Coloring& c = inst.g.coloring;
    std::vector<std::vector<ParetoPoint>> fronts(algorithms.size());
    parallel_for(algorithms.size(), o.jobs, [&](std::size_t i) {
      const std::string& a = algorithms[i];
      std::vector<Candidate> trace;
      std::string label;
      if (const auto alg = spectral(a)) {
        SweepConfig cfg;
        cfg.delta = o.delta;
        cfg.eigen = eigen_settings(o);
        trace = candidate_trace(*alg, g, c, cfg);
        label = std::string(to_string(*alg));
      } else if (a == "2dfsg") {
        trace = two_dfsg_trace(g, c);
        label = "2DFSG";
      } else {
        const SolutionRecord r = run_one(a, g, c, o);
        if (!r.nodes.empty()) trace.push_back({Ordering::NonIncreasing, r.size, r.density, r.balance});
        label = r.algorithm;
      }
      std::vector<ParetoPoint> pts;
      for (const Candidate& cand : trace) pts.push_back({cand.density, cand.balance, cand.size, label});
      fronts[i] = pareto_front(std::move(pts));
    });
    for (const auto& front : fronts) {
      for (const ParetoPoint& p : front) {
        body << csv_field(inst.name) << ',' << csv_field(p.algorithm) << ',' << format_real(p.density)
             << ',' << format_real(p.balance) << ',' << p.size << '\n';
      }
    }
  }
  out << "algorithm,density,balance,size\n" << body.str();
  emit(o.out, out.str());
}

void cmd_summary(const Common& o) {
  if (o.inputs.empty()) throw UsageError("summary needs --input");
  std::vector<RunRow> rows;
  for (const std::string& in : o.inputs) {
    std::ifstream f(in, std::ios::binary);
    if (!f) throw Error("cannot open " + in);
    try {
      std::vector<RunRow> part = read_runs_csv(f);
      std::move(part.begin(), part.end(), std::back_inserter(rows));
    } catch (const ParseError& e) {
      throw ParseError(in + ": " + e.what(), 0);
    }
  }
  const std::vector<AlgorithmSummary> s = summarize(rows);
  std::ostringstream out;
  write_manifest(out, manifest("summary", o));
  write_summary_csv(out, s);
  emit(o.out, out.str());
  write_summary_table(std::cerr, s);
}

void add_common(CLI::App* cmd, Common& o, bool algorithm, bool eigen) {
  cmd->add_option("--input", o.inputs, "Input file(s)")->required();
  cmd->add_option("--out", o.out, "Output path (stdout when omitted)");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Seed for every random choice")->envname("FAIRDSG_SEED");
  if (algorithm) {
    cmd->add_option("--algorithm", o.algorithm, "ss, fss, ps, fps, 2dfsg, exact, oracle, a comma list, or all");
  }
  if (eigen) {
    cmd->add_option("--delta", o.delta, "Imbalance allowance for ss/fss")->check(CLI::NonNegativeNumber);
    cmd->add_option("--tol", o.tol, "Eigensolver relative residual")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iters", o.max_iters, "Eigensolver iteration cap")->check(CLI::PositiveNumber);
    cmd->add_flag("--record-timing", o.record_timing, "Write wall-clock runtimes (breaks byte-identical output)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair densest subgraph toolkit"};
  app.require_subcommand(1);
  Common o;
  PlantedOptions p;

  auto* polbooks = app.add_subcommand("ingest-polbooks", "PolBooks GML to edge list");
  add_common(polbooks, o, false, false);

  auto* amazon = app.add_subcommand("ingest-amazon", "Amazon JSON lines to category-pair edge lists");
  add_common(amazon, o, false, false);
  amazon->add_option("--min-nodes", o.min_nodes, "Smallest subgraph kept")->check(CLI::PositiveNumber);

  auto* run = app.add_subcommand("run", "Run algorithms on edge-list instances");
  add_common(run, o, true, true);

  auto* planted = app.add_subcommand("planted", "Planted fair-set recovery experiment");
  planted->add_option("--out", o.out, "Output path (stdout when omitted)");
  planted->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  planted->add_option("--seed", o.seed, "First seed")->envname("FAIRDSG_SEED");
  planted->add_option("--algorithm", o.algorithm, "ss, fss, ps or fps");
  planted->add_option("--tol", o.tol, "Eigensolver relative residual")->check(CLI::PositiveNumber);
  planted->add_option("--max-iters", o.max_iters, "Eigensolver iteration cap")->check(CLI::PositiveNumber);
  planted->add_option("--delta", p.fixed_delta, "Fixed imbalance allowance instead of 16(eps+theta)")
      ->check(CLI::NonNegativeNumber);
  planted->add_option("--n", p.n, "Total nodes");
  planted->add_option("--m", p.m, "Planted set size (even)");
  planted->add_option("--d", p.d, "Planted internal degree");
  planted->add_option("--eps", p.eps, "Regularity slack");
  planted->add_option("--p-bg", p.p_bg, "Background edge probability");
  planted->add_option("--seeds", p.seeds, "Number of instances")->check(CLI::PositiveNumber);
  planted->add_option("--max-resamples", p.max_resamples, "Reseeds allowed when hypotheses fail");
  planted->add_option("--save-instances", p.save_dir, "Directory for the generated edge lists");

  auto* pareto = app.add_subcommand("pareto", "Pareto fronts of the candidates each algorithm examines");
  add_common(pareto, o, true, true);

  auto* summary = app.add_subcommand("summary", "Aggregate run CSV files");
  add_common(summary, o, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (o.algorithm.empty()) {
    if (planted->parsed()) o.algorithm = "fss";
    if (run->parsed() || pareto->parsed()) o.algorithm = "all";
  }
  try {
    if (polbooks->parsed()) cmd_ingest_polbooks(o);
    if (amazon->parsed()) cmd_ingest_amazon(o);
    if (run->parsed()) cmd_run(o);
    if (planted->parsed()) cmd_planted(o, p);
    if (pareto->parsed()) cmd_pareto(o);
    if (summary->parsed()) cmd_summary(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
