#include "fairdsg/amazon.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "json.hpp"

namespace fairdsg {

namespace {

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); });
}

}  // namespace

AmazonParse parse_amazon_jsonl(std::istream& in) {
  if (!in) throw Error("cannot read product stream");
  AmazonParse out;
  std::string line;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      ++out.malformed;
      continue;
    }
    const auto asin = j.find("asin");
    if (asin == j.end() || !asin->is_string() || asin->get_ref<const std::string&>().empty()) {
      ++out.malformed;
      continue;
    }
    ProductRecord r;
    r.asin = asin->get<std::string>();
    if (const auto cat = j.find("main_cat"); cat != j.end() && cat->is_string()) {
      r.main_cat = cat->get<std::string>();
    }
    if (const auto buy = j.find("also_buy"); buy != j.end() && buy->is_array()) {
      for (const auto& item : *buy) {
        if (item.is_string()) r.also_buy.push_back(item.get<std::string>());
      }
    }
    out.records.push_back(std::move(r));
  }
  if (in.bad()) throw Error("error while reading product stream");
  return out;
}

ProductGraph build_product_graph(const std::vector<ProductRecord>& records) {
  std::map<std::string, std::string> category;
  for (const ProductRecord& r : records) {
    auto [it, inserted] = category.emplace(r.asin, r.main_cat);
    if (!inserted && it->second.empty()) it->second = r.main_cat;
  }
  std::unordered_map<std::string, NodeId> index;
  ProductGraph out;
  std::vector<std::string> names;
  for (const auto& [asin, cat] : category) {
    index.emplace(asin, static_cast<NodeId>(names.size()));
    names.push_back(asin);
    out.categories.push_back(cat);
  }
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (const ProductRecord& r : records) {
    const NodeId u = index.at(r.asin);
    for (const std::string& other : r.also_buy) {
      const auto it = index.find(other);
      if (it == index.end()) {
        ++out.dangling_references;
        continue;
      }
      if (it->second == u) continue;
      pairs.emplace(std::min(u, it->second), std::max(u, it->second));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
  const std::size_t n = names.size();
  out.graph = LabeledGraph::from_edges(n, std::move(edges), std::move(names));
  return out;
}

std::vector<CategoryPairGraph> category_pair_subgraphs(const LabeledGraph& g,
                                                       const std::vector<std::string>& categories,
                                                       std::size_t min_nodes) {
  if (categories.size() != g.num_nodes()) throw Error("category list does not match graph size");
  if (min_nodes < 1) throw Error("min_nodes must be at least 1");

  std::map<std::string, std::uint32_t> cat_index;
  for (const std::string& c : categories) cat_index.emplace(c, 0);
  std::uint32_t next = 0;
  std::vector<std::string> cat_names;
  for (auto& [name, id] : cat_index) {
    id = next++;
    cat_names.push_back(name);
  }
  std::vector<std::uint32_t> cat(g.num_nodes());
  for (std::size_t u = 0; u < g.num_nodes(); ++u) cat[u] = cat_index.at(categories[u]);

  // members[(a, b)] holds nodes of category a with a neighbor in category b.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<NodeId>> members;
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    std::set<std::uint32_t> seen;
    for (const Neighbor& nb : g.neighbors(static_cast<NodeId>(u))) {
      const std::uint32_t other = cat[nb.node];
      if (other != cat[u] && seen.insert(other).second) {
        members[{cat[u], other}].push_back(static_cast<NodeId>(u));
      }
    }
  }

  std::vector<CategoryPairGraph> out;
  for (const auto& [key, red] : members) {
    const auto [a, b] = key;
    if (a > b) continue;
    const auto blue = members.find({b, a});
    if (blue == members.end()) continue;
    std::vector<NodeId> nodes = red;
    nodes.insert(nodes.end(), blue->second.begin(), blue->second.end());
    if (nodes.size() < min_nodes) continue;
    NodeSet s(std::move(nodes));
    std::vector<Color> colors;
    colors.reserve(s.size());
    for (NodeId u : s) colors.push_back(cat[u] == a ? Color::Red : Color::Blue);
    out.push_back({cat_names[a] + "|" + cat_names[b], induced_subgraph(g, s), Coloring(std::move(colors))});
  }
  std::sort(out.begin(), out.end(),
            [](const CategoryPairGraph& x, const CategoryPairGraph& y) { return x.name < y.name; });
  return out;
}

}  // namespace fairdsg
