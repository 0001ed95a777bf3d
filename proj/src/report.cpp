#include "fairdsg/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>

#include "fairdsg/densest.hpp"

namespace fairdsg {

bool dominates(const ParetoPoint& p, const ParetoPoint& q) {
  return p.density >= q.density && p.balance >= q.balance &&
         (p.density > q.density || p.balance > q.balance);
}

std::vector<ParetoPoint> pareto_front(std::vector<ParetoPoint> points) {
  std::sort(points.begin(), points.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
    if (a.density != b.density) return a.density > b.density;
    if (a.balance != b.balance) return a.balance > b.balance;
    if (a.size != b.size) return a.size < b.size;
    return a.algorithm < b.algorithm;
  });
  std::vector<ParetoPoint> front;
  for (ParetoPoint& p : points) {
    if (front.empty() || p.balance > front.back().balance) front.push_back(std::move(p));
  }
  return front;
}

double normalized_density(const SolutionRecord& record, double optimum) {
  if (!(optimum > 0.0)) throw Error("normalized density needs a positive optimum");
  if (!record.fair || record.status != Status::Found) return 0.0;
  return record.density / optimum;
}

double normalized_density(const SolutionRecord& record, const LabeledGraph& g) {
  return normalized_density(record, exact_densest_subgraph(g).density);
}

void write_manifest(std::ostream& out, const RunManifest& m) {
  out << "# command: " << m.command << '\n';
  for (const std::string& in : m.inputs) out << "# input: " << in << '\n';
  if (!m.algorithm.empty()) out << "# algorithm: " << m.algorithm << '\n';
  out << "# delta: " << format_real(m.delta) << '\n';
  out << "# eigen: tol=" << format_real(m.tol) << " max_iters=" << m.max_iters << '\n';
  out << "# seed: " << m.seed << '\n';
  out << "# version: " << m.version << '\n';
}

RunRow make_row(const SolutionRecord& record, std::string instance, const LabeledGraph& g,
                const Coloring& c, double optimum, std::uint64_t seed) {
  RunRow r;
  r.algorithm = record.algorithm;
  r.instance = std::move(instance);
  r.n = g.num_nodes();
  r.n_red = c.n_red();
  r.n_blue = c.n_blue();
  r.edges = g.num_edges();
  r.sol_size = record.size;
  r.sol_red = record.n_red;
  r.sol_blue = record.n_blue;
  r.density = record.density;
  r.balance = record.balance;
  r.normalized_density = optimum > 0.0 ? normalized_density(record, optimum) : 0.0;
  r.fair = record.fair;
  r.status = record.status;
  r.runtime_ms = record.runtime_ms;
  r.seed = seed;
  return r;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

const char* const kRunCsvHeader =
    "algorithm,instance,n,n_red,n_blue,edges,sol_size,sol_red,sol_blue,density,balance,"
    "normalized_density,fair,status,runtime_ms,seed";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"' && cur.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line_no);
  out.push_back(std::move(cur));
  return out;
}

void write_runs_csv(std::ostream& out, const std::vector<RunRow>& rows) {
  out << kRunCsvHeader << '\n';
  for (const RunRow& r : rows) {
    out << csv_field(r.algorithm) << ',' << csv_field(r.instance) << ',' << r.n << ',' << r.n_red
        << ',' << r.n_blue << ',' << r.edges << ',' << r.sol_size << ',' << r.sol_red << ','
        << r.sol_blue << ',' << format_real(r.density) << ',' << format_real(r.balance) << ','
        << format_real(r.normalized_density) << ',' << (r.fair ? "true" : "false") << ','
        << to_string(r.status) << ',' << format_real(r.runtime_ms) << ',' << r.seed << '\n';
  }
}

namespace {

template <class T>
T parse_number(const std::string& s, std::size_t line_no) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad number '" + s + "'", line_no);
  }
  return v;
}

}  // namespace

std::vector<RunRow> read_runs_csv(std::istream& in) {
  std::vector<RunRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header) {
      if (!line.empty() && line[0] == '#') continue;
      if (line != kRunCsvHeader) throw ParseError("unexpected CSV header", line_no);
      header = true;
      continue;
    }
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line, line_no);
    if (f.size() != 16) throw ParseError("expected 16 fields, got " + std::to_string(f.size()), line_no);
    RunRow r;
    r.algorithm = f[0];
    r.instance = f[1];
    r.n = parse_number<std::size_t>(f[2], line_no);
    r.n_red = parse_number<std::size_t>(f[3], line_no);
    r.n_blue = parse_number<std::size_t>(f[4], line_no);
    r.edges = parse_number<std::size_t>(f[5], line_no);
    r.sol_size = parse_number<std::size_t>(f[6], line_no);
    r.sol_red = parse_number<std::size_t>(f[7], line_no);
    r.sol_blue = parse_number<std::size_t>(f[8], line_no);
    r.density = parse_number<double>(f[9], line_no);
    r.balance = parse_number<double>(f[10], line_no);
    r.normalized_density = parse_number<double>(f[11], line_no);
    if (f[12] != "true" && f[12] != "false") throw ParseError("bad fair flag '" + f[12] + "'", line_no);
    r.fair = f[12] == "true";
    try {
      r.status = status_from_string(f[13]);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
    r.runtime_ms = parse_number<double>(f[14], line_no);
    r.seed = parse_number<std::uint64_t>(f[15], line_no);
    rows.push_back(std::move(r));
  }
  if (!header) throw ParseError("missing CSV header", line_no);
  return rows;
}

void write_pareto_csv(std::ostream& out, const std::vector<ParetoPoint>& points) {
  out << "algorithm,density,balance,size\n";
  for (const ParetoPoint& p : points) {
    out << csv_field(p.algorithm) << ',' << format_real(p.density) << ','
        << format_real(p.balance) << ',' << p.size << '\n';
  }
}

double quantile(std::vector<double> sample, double q) {
  if (sample.empty()) return 0.0;
  std::sort(sample.begin(), sample.end());
  const double pos = q * static_cast<double>(sample.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sample.size() - 1);
  return sample[lo] + (pos - static_cast<double>(lo)) * (sample[hi] - sample[lo]);
}

std::vector<AlgorithmSummary> summarize(const std::vector<RunRow>& rows) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const RunRow*>> groups;
  for (const RunRow& r : rows) {
    auto& g = groups[r.algorithm];
    if (g.empty()) order.push_back(r.algorithm);
    g.push_back(&r);
  }
  std::vector<AlgorithmSummary> out;
  for (const std::string& name : order) {
    AlgorithmSummary s;
    s.algorithm = name;
    std::vector<double> normalized;
    for (const RunRow* r : groups[name]) {
      ++s.runs;
      if (!r->fair || r->status != Status::Found) ++s.unfair;
      normalized.push_back(r->normalized_density);
    }
    s.percent_unfair = 100.0 * static_cast<double>(s.unfair) / static_cast<double>(s.runs);
    s.q1 = quantile(normalized, 0.25);
    s.median = quantile(normalized, 0.5);
    s.q3 = quantile(normalized, 0.75);
    out.push_back(std::move(s));
  }
  return out;
}

void write_summary_csv(std::ostream& out, const std::vector<AlgorithmSummary>& s) {
  out << "algorithm,runs,unfair,percent_unfair,q1,median,q3\n";
  for (const AlgorithmSummary& a : s) {
    out << csv_field(a.algorithm) << ',' << a.runs << ',' << a.unfair << ','
        << format_real(a.percent_unfair) << ',' << format_real(a.q1) << ','
        << format_real(a.median) << ',' << format_real(a.q3) << '\n';
  }
}

void write_summary_table(std::ostream& out, const std::vector<AlgorithmSummary>& s) {
  out << std::left << std::setw(10) << "algorithm" << std::right << std::setw(8) << "runs"
      << std::setw(10) << "% unfair" << std::setw(10) << "q1" << std::setw(10) << "median"
      << std::setw(10) << "q3" << '\n';
  char buf[128];
  for (const AlgorithmSummary& a : s) {
    std::snprintf(buf, sizeof buf, "%-10s%8zu%10.2f%10.4f%10.4f%10.4f\n", a.algorithm.c_str(),
                  a.runs, a.percent_unfair, a.q1, a.median, a.q3);
    out << buf;
  }
}

}  // namespace fairdsg
