#include "fairdsg/edge_list.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace fairdsg {

std::string shortest_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw Error("cannot format number");
  return std::string(buf, ptr);
}

void write_edge_list(std::ostream& out, const LabeledGraph& g, const Coloring& c) {
  if (c.size() != g.num_nodes()) throw Error("coloring does not match graph size");
  out << g.num_nodes() << ' ' << c.n_red() << ' ' << c.n_blue() << '\n';
  out << c.to_string() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << shortest_double(e.w) << '\n';
}

std::string edge_list_string(const LabeledGraph& g, const Coloring& c) {
  std::ostringstream out;
  write_edge_list(out, g, c);
  return out.str();
}

namespace {

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class T>
T number(std::string_view s, std::size_t line, const char* what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  }
  return v;
}

}  // namespace

ColoredGraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    return true;
  };

  std::string_view line;
  bool have_header = false;
  while (next_line(line)) {
    if (!line.empty() && line[0] == '#') continue;
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError("missing header", line_no);
  const auto header = fields(line);
  if (header.size() != 3) throw ParseError("header must be 'n n_red n_blue'", line_no);
  const auto n = number<std::size_t>(header[0], line_no, "node count");
  const auto n_red = number<std::size_t>(header[1], line_no, "red count");
  const auto n_blue = number<std::size_t>(header[2], line_no, "blue count");
  if (n_red + n_blue != n) throw ParseError("n_red + n_blue differs from n", line_no);

  if (!next_line(line)) throw ParseError("missing color line", line_no + 1);
  const auto color_fields = fields(line);
  const std::string_view rb = color_fields.empty() ? std::string_view{} : color_fields[0];
  if (color_fields.size() > 1 || rb.size() != n) {
    throw ParseError("color line must hold exactly " + std::to_string(n) + " R/B characters", line_no);
  }
  Coloring coloring;
  try {
    coloring = Coloring::from_string(rb);
  } catch (const Error& e) {
    throw ParseError(e.what(), line_no);
  }
  if (coloring.n_red() != n_red) throw ParseError("color line disagrees with header counts", line_no);

  std::vector<Edge> edges;
  while (next_line(line)) {
    const auto f = fields(line);
    if (f.empty()) continue;
    if (f.size() != 3) throw ParseError("edge line must be 'u v w'", line_no);
    const auto u = number<std::uint64_t>(f[0], line_no, "node id");
    const auto v = number<std::uint64_t>(f[1], line_no, "node id");
    const auto w = number<double>(f[2], line_no, "weight");
    if (u >= n || v >= n) throw ParseError("node id out of range", line_no);
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
  }
  ColoredGraph out;
  try {
    out.graph = LabeledGraph::from_edges(n, std::move(edges));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
  out.coloring = std::move(coloring);
  return out;
}

ColoredGraph read_edge_list(std::istream& in) {
  if (!in) throw Error("cannot read edge list");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("error while reading edge list");
  return parse_edge_list(buf.str());
}

}  // namespace fairdsg
