#include "doctest.h"
#include "fairdsg/densest.hpp"
#include "fairdsg/oracle.hpp"
#include "fairdsg/random.hpp"
#include "helpers.hpp"
#include "oracles/random_graphs.hpp"

using namespace fairdsg;

TEST_SUITE("densest") {
  TEST_CASE("clique with a pendant node") {
    const LabeledGraph g = testing::unit_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    const DensestResult r = exact_densest_subgraph(g);
    CHECK(r.nodes == testing::set({0, 1, 2, 3}));
    CHECK(r.density == doctest::Approx(3.0));
  }

  TEST_CASE("path on three nodes") {
    const DensestResult r = exact_densest_subgraph(testing::unit_graph(3, {{0, 1}, {1, 2}}));
    CHECK(r.nodes == NodeSet::all(3));
    CHECK(r.density == doctest::Approx(4.0 / 3.0));
  }

  TEST_CASE("edgeless graph") {
    const DensestResult r = exact_densest_subgraph(LabeledGraph::from_edges(3, {}));
    CHECK(r.nodes.size() == 1);
    CHECK(r.density == 0.0);
    CHECK_THROWS_AS(exact_densest_subgraph(LabeledGraph{}), Error);
  }

  TEST_CASE("fractional weights take the real path") {
    const LabeledGraph g = LabeledGraph::from_edges(4, {{0, 1, 0.5}, {1, 2, 0.25}, {0, 2, 0.75}, {2, 3, 0.1}});
    const DensestResult r = exact_densest_subgraph(g);
    const OracleResult o = brute_force_densest(g, Coloring::from_string("RRBB"), OracleConstraint::unconstrained());
    CHECK(r.density == doctest::Approx(o.density).epsilon(1e-9));
  }

  TEST_CASE("matches the subset oracle") {
    Rng rng(59);
    for (int t = 0; t < 80; ++t) {
      const std::size_t n = 2 + rng.below(11);
      const LabeledGraph g = oracle::random_graph(n, 0.3 + 0.4 * rng.uniform(), rng, t % 2 == 0);
      if (g.num_edges() == 0) continue;
      const Coloring c = oracle::random_coloring(n, rng);
      const DensestResult r = exact_densest_subgraph(g);
      const OracleResult o = brute_force_densest(g, c, OracleConstraint::unconstrained());
      CHECK(std::abs(r.density - o.density) <= 1e-9);
      CHECK(r.density == doctest::Approx(density(g, r.nodes)));
      CHECK(r.density >= 2.0 * g.total_weight() / static_cast<double>(n) - 1e-12);
      for (int k = 0; k < 50; ++k) {
        std::vector<NodeId> s;
        for (NodeId u = 0; u < n; ++u) {
          if (rng.bernoulli(0.5)) s.push_back(u);
        }
        if (!s.empty()) CHECK(r.density >= density(g, NodeSet(s)) - 1e-12);
      }
    }
  }

  TEST_CASE("2-DFSG on a fair clique") {
    const SolutionRecord r = two_dfsg(testing::complete_graph(4), Coloring::from_string("RRBB"));
    CHECK(r.status == Status::Found);
    CHECK(r.size == 4);
    CHECK(r.density == doctest::Approx(3.0));
    CHECK(r.algorithm == "2DFSG");
  }

  TEST_CASE("2-DFSG on an all-red graph is unfair") {
    const SolutionRecord r = two_dfsg(testing::triangle(), Coloring::from_string("RRR"));
    CHECK(r.status == Status::Unfair);
    CHECK_FALSE(r.fair);
    CHECK(r.size == 3);
  }

  TEST_CASE("2-DFSG pads with the best connected minority node") {
    // Red K4 is the densest part; blues 5, 7, 9 form a chain hanging off node 0.
    const LabeledGraph g = testing::unit_graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                                    {0, 5}, {5, 7}, {7, 9}});
    const Coloring c = Coloring::from_string("RRRRBBBBBB");
    const std::vector<Candidate> trace = two_dfsg_trace(g, c);
    REQUIRE(trace.size() == 5);
    CHECK(trace[0].size == 4);
    CHECK(trace[0].density == doctest::Approx(3.0));
    const SolutionRecord r = two_dfsg(g, c);
    CHECK(r.fair);
    CHECK(r.nodes == testing::set({0, 1, 2, 3, 4, 5, 7, 9}));
  }

  TEST_CASE("2-DFSG halves at worst on fair graphs") {
    Rng rng(61);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 * (1 + rng.below(6));
      const LabeledGraph g = oracle::random_graph(n, 0.5, rng);
      if (g.num_edges() == 0) continue;
      const Coloring c = oracle::balanced_coloring(n, rng);
      const SolutionRecord r = two_dfsg(g, c);
      const OracleResult fair = brute_force_densest(g, c, OracleConstraint::fair());
      CHECK(r.status == Status::Found);
      CHECK(r.fair);
      CHECK(r.density >= 0.5 * fair.density - 1e-9);
      CHECK(r.size <= 2 * exact_densest_subgraph(g).nodes.size());
      CHECK(two_dfsg(g, c).nodes == r.nodes);
    }
  }
}
