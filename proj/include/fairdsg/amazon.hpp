#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "fairdsg/graph.hpp"

namespace fairdsg {

struct ProductRecord {
  std::string asin;
  std::string main_cat;
  std::vector<std::string> also_buy;
};

struct AmazonParse {
  std::vector<ProductRecord> records;
  std::size_t malformed = 0;  // lines skipped: bad JSON, not an object, missing asin
};

// One JSON object per line; blank lines are ignored. Throws Error when the
// stream cannot be read.
AmazonParse parse_amazon_jsonl(std::istream& in);

struct ProductGraph {
  LabeledGraph graph;                  // node names are asins, ids in asin order
  std::vector<std::string> categories;  // main_cat per node
  std::size_t dangling_references = 0;  // also_buy entries naming unknown asins
};

/// Undirected union of also_buy references with unit weights. Records
/// sharing an asin are merged (first non-empty main_cat wins); self
/// references and repeated pairs collapse to nothing and one edge.
ProductGraph build_product_graph(const std::vector<ProductRecord>& records);

struct CategoryPairGraph {
  std::string name;  // "<red category>|<blue category>"
  LabeledGraph graph;
  Coloring coloring;
};

/// For every pair of categories l1 < l2, the subgraph induced by the l1
/// nodes with a neighbor in l2 and the l2 nodes with a neighbor in l1;
/// l1 is Red. Neighborhood is taken in the full graph. Pairs with fewer
/// than `min_nodes` nodes are skipped. Output is sorted by name.
std::vector<CategoryPairGraph> category_pair_subgraphs(const LabeledGraph& g,
                                                       const std::vector<std::string>& categories,
                                                       std::size_t min_nodes = 100);

}  // namespace fairdsg
