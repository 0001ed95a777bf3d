#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fairdsg/graph.hpp"
#include "fairdsg/random.hpp"
#include "fairdsg/spectral.hpp"
#include "helpers.hpp"
#include "oracles/random_graphs.hpp"

using namespace fairdsg;
using testing::set;

TEST_SUITE("graph") {
  TEST_CASE("density of small graphs") {
    CHECK(density(testing::triangle(), NodeSet::all(3)) == doctest::Approx(2.0));
    CHECK(density(testing::unit_graph(2, {{0, 1}}), set({0, 1})) == doctest::Approx(1.0));
    CHECK_THROWS_WITH_AS(density(testing::triangle(), NodeSet{}), "empty-set density undefined", Error);
  }

  TEST_CASE("weighted density counts weights") {
    const LabeledGraph g = LabeledGraph::from_edges(3, {{0, 1, 2.5}, {1, 2, 0.5}});
    CHECK(density(g, NodeSet::all(3)) == doctest::Approx(2.0));
    CHECK(density(g, set({0, 1})) == doctest::Approx(2.5));
  }

  TEST_CASE("balance and imbalance") {
    const Coloring c = Coloring::from_string("RRBBBB");
    CHECK(balance(set({0, 1, 2, 3}), c) == 1.0);
    CHECK(balance(set({0, 2, 3, 4}), c) == doctest::Approx(1.0 / 3.0));
    const Coloring reds = Coloring::from_string("RRRR");
    CHECK(balance(NodeSet::all(4), reds) == 0.0);
    CHECK_THROWS_AS(balance(NodeSet{}, c), Error);

    CHECK(imbalance(set({0, 1, 2, 3}), c) == 0);
    CHECK(imbalance(set({0, 1, 2}), Coloring::from_string("RRRB")) == 3);
    CHECK(imbalance(set({0, 1, 2, 3}), Coloring::from_string("RRRB")) == 2);
    CHECK(imbalance(NodeSet{}, c) == 0);
    CHECK(is_fair(NodeSet{}, c));
  }

  TEST_CASE("induced subgraph") {
    const LabeledGraph tri = testing::triangle();
    const LabeledGraph edge = induced_subgraph(tri, set({0, 1}));
    CHECK(edge.num_nodes() == 2);
    CHECK(edge.num_edges() == 1);
    CHECK(density(edge, NodeSet::all(2)) == doctest::Approx(1.0));

    const LabeledGraph k4 = testing::complete_graph(4);
    const LabeledGraph sub = induced_subgraph(k4, set({0, 2, 3}));
    CHECK(sub == tri);
    CHECK(sub.node_names() == std::vector<std::string>{"0", "2", "3"});
    CHECK(induced_subgraph(k4, NodeSet::all(4)) == k4);
    CHECK_THROWS_AS(induced_subgraph(tri, set({0, 5})), Error);
  }

  TEST_CASE("construction merges duplicates and drops loops") {
    const LabeledGraph g = LabeledGraph::from_edges(3, {{1, 0, 1.0}, {0, 1, 2.0}, {2, 2, 4.0}, {1, 2, 1.0}});
    CHECK(g.num_edges() == 2);
    CHECK(g.weight(0, 1) == 3.0);
    CHECK(g.weight(1, 0) == 3.0);
    CHECK(g.weight(0, 2) == 0.0);
    CHECK(g.dropped_self_loops() == 1);
    CHECK(g.merged_duplicates() == 1);
    CHECK(g.degree(1) == 4.0);
    CHECK(g.max_degree() == 4.0);
    CHECK(g.total_weight() == 4.0);
    CHECK_THROWS_AS(LabeledGraph::from_edges(2, {{0, 2, 1.0}}), Error);
    CHECK_THROWS_AS(LabeledGraph::from_edges(2, {{0, 1, -1.0}}), Error);
    CHECK_THROWS_AS(LabeledGraph::from_edges(2, {{0, 1, NAN}}), Error);
  }

  TEST_CASE("adjacency is symmetric and degrees add up") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
      const LabeledGraph g = oracle::random_graph(15, 0.3, rng, true);
      double dmax = 0.0;
      for (NodeId u = 0; u < g.num_nodes(); ++u) {
        double d = 0.0;
        NodeId prev = 0;
        bool first = true;
        for (const Neighbor& nb : g.neighbors(u)) {
          CHECK(nb.node != u);
          CHECK((first || nb.node > prev));
          CHECK(g.weight(nb.node, u) == nb.weight);
          d += nb.weight;
          prev = nb.node;
          first = false;
        }
        CHECK(d == doctest::Approx(g.degree(u)));
        dmax = std::max(dmax, d);
      }
      CHECK(dmax == g.max_degree());
    }
  }

  TEST_CASE("construction ignores edge order") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
      const LabeledGraph g = oracle::random_graph(12, 0.4, rng, true);
      std::vector<Edge> edges(g.edges().begin(), g.edges().end());
      rng.shuffle(std::span(edges));
      for (Edge& e : edges) {
        if (rng.bernoulli(0.5)) std::swap(e.u, e.v);
      }
      CHECK(LabeledGraph::from_edges(12, edges) == g);
    }
  }

  TEST_CASE("density bounds and induced consistency") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
      const LabeledGraph g = oracle::random_graph(10, 0.5, rng, true);
      std::vector<NodeId> members;
      for (NodeId u = 0; u < 10; ++u) {
        if (rng.bernoulli(0.5)) members.push_back(u);
      }
      if (members.empty()) members.push_back(0);
      const NodeSet s(members);
      const double d = density(g, s);
      CHECK(d >= 0.0);
      CHECK(d <= g.max_degree() + 1e-12);
      const LabeledGraph sub = induced_subgraph(g, s);
      CHECK(density(sub, NodeSet::all(sub.num_nodes())) == doctest::Approx(d).epsilon(1e-12));
      double inside = 0.0;
      for (NodeId u : s) {
        for (const Neighbor& nb : g.neighbors(u)) {
          if (s.contains(nb.node)) inside += nb.weight;
        }
      }
      CHECK(d == doctest::Approx(inside / static_cast<double>(s.size())));
    }
  }

  TEST_CASE("fair indicator is orthogonal to the fairness vector") {
    const Coloring c = Coloring::from_string("RBRBBRRB");
    const NodeSet s = set({0, 1, 2, 3});
    const std::vector<double> chi = s.indicator(8);
    CHECK(std::abs(FairnessVector(c).dot(chi)) <= 1e-12);
    CHECK(chi[0] == doctest::Approx(0.5));
    CHECK(chi[5] == 0.0);
  }

  TEST_CASE("node set and coloring basics") {
    const NodeSet s(std::vector<NodeId>{4, 1, 4, 2});
    CHECK(s.size() == 3);
    CHECK(std::vector<NodeId>(s.begin(), s.end()) == std::vector<NodeId>{1, 2, 4});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
    const Coloring c = Coloring::from_string("RBBR");
    CHECK(c.n_red() == 2);
    CHECK(c.n_blue() == 2);
    CHECK(c.is_fair());
    CHECK(c.to_string() == "RBBR");
    CHECK_THROWS_AS(Coloring::from_string("RXB"), Error);
    CHECK(restrict_coloring(c, set({1, 3})).to_string() == "BR");
  }
}
