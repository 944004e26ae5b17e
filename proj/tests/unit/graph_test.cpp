#include <gtest/gtest.h>

#include "generators.hpp"
#include "wcm/graph.hpp"

namespace wcm {
namespace {

WeightedGraph make(int n, std::initializer_list<Edge> edges) {
  WeightedGraph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v, e.w);
  return g;
}

TEST(WeightedGraph, RejectsSelfLoopsAndParallelEdges) {
  WeightedGraph g(3);
  g.add_edge(0, 1, 2);
  EXPECT_THROW(g.add_edge(1, 0, 5), Error);
  EXPECT_THROW(g.add_edge(2, 2, 1), Error);
  EXPECT_THROW(g.add_edge(0, 3, 1), Error);
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_EQ(*g.find_edge(1, 0), 0);
  EXPECT_FALSE(g.find_edge(0, 2));
}

TEST(Matching, FromEdgesChecksDisjointness) {
  const WeightedGraph g = make(4, {{0, 1, 3}, {1, 2, -1}, {2, 3, 4}});
  const Matching m = Matching::from_edges(g, {2, 0});
  EXPECT_EQ(m.weight(), 7);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(std::vector<EdgeId>(m.edges().begin(), m.edges().end()), (std::vector<EdgeId>{0, 2}));
  EXPECT_TRUE(m.saturates(3));
  EXPECT_EQ(m.recompute_weight(g), 7);
  EXPECT_THROW(Matching::from_edges(g, {0, 1}), Error);
  EXPECT_THROW(Matching::from_edges(g, {5}), Error);
}

TEST(Connectivity, IsConnected) {
  EXPECT_TRUE(is_connected(make(2, {{0, 1, 1}})));
  EXPECT_FALSE(is_connected(make(4, {{0, 1, 1}, {2, 3, 1}})));
  EXPECT_TRUE(is_connected(WeightedGraph(0)));
}

TEST(Connectivity, InducedByMatching) {
  const WeightedGraph p4 = make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  EXPECT_TRUE(induced_by_matching_connected(p4, Matching::from_edges(p4, {0, 2})));
  const WeightedGraph p5 = make(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  EXPECT_FALSE(induced_by_matching_connected(p5, Matching::from_edges(p5, {0, 3})));
  EXPECT_TRUE(induced_by_matching_connected(p5, Matching{}));
}

TEST(Classify, SmallGraphs) {
  testing::Rng rng(1);
  const auto c5 = classify(testing::cycle_graph({1, 1, 1, 1, 1}));
  EXPECT_TRUE(c5.connected);
  EXPECT_TRUE(c5.is_cycle);
  EXPECT_FALSE(c5.bipartite());
  EXPECT_FALSE(c5.chordal());

  const auto k4 = classify(testing::complete_graph(4, rng, 1, 1));
  EXPECT_TRUE(k4.chordal());
  EXPECT_FALSE(k4.bipartite());
  EXPECT_FALSE(k4.is_tree);

  const auto star = classify(make(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, -2}}));
  EXPECT_TRUE(star.is_tree);
  EXPECT_TRUE(star.bipartite());
  EXPECT_TRUE(star.chordal());
  EXPECT_FALSE(star.all_weights_nonnegative);
  EXPECT_EQ(star.max_degree, 3);
}

TEST(Classify, BipartitionTwoColoursEveryEdge) {
  testing::Rng rng(7);
  for (int round = 0; round < 20; ++round) {
    const WeightedGraph g = testing::random_tree(15, rng, -3, 3);
    const auto c = classify(g);
    ASSERT_TRUE(c.bipartite());
    for (const Edge& e : g.edges()) {
      EXPECT_NE((*c.bipartition)[static_cast<std::size_t>(e.u)], (*c.bipartition)[static_cast<std::size_t>(e.v)]);
    }
  }
}

TEST(PerfectElimination, RandomChordalGraphsAreRecognised) {
  testing::Rng rng(11);
  for (int round = 0; round < 30; ++round) {
    const WeightedGraph g = testing::random_chordal(12, rng, 0, 5);
    const auto peo = perfect_elimination_order(g);
    ASSERT_TRUE(peo);
    EXPECT_TRUE(is_perfect_elimination_order(g, *peo));
  }
  EXPECT_FALSE(perfect_elimination_order(testing::cycle_graph({1, 1, 1, 1})));
}

TEST(ArticulationPoints, Examples) {
  EXPECT_EQ(articulation_points(make(3, {{0, 1, 1}, {1, 2, 1}})), std::vector<Vertex>{1});
  EXPECT_TRUE(articulation_points(testing::cycle_graph({1, 1, 1, 1, 1, 1})).empty());
  const WeightedGraph bowtie = make(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1}});
  EXPECT_EQ(articulation_points(bowtie), std::vector<Vertex>{2});
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(make(2, {{0, 1, 1}})), 1);
  EXPECT_EQ(diameter(testing::path_graph({1, 1, 1})), 3);
  EXPECT_EQ(diameter(testing::cycle_graph({1, 1, 1, 1, 1, 1})), 3);
  EXPECT_THROW(diameter(make(4, {{0, 1, 1}, {2, 3, 1}})), Error);
}

TEST(InducedSubgraph, MapsEdgesBack) {
  const WeightedGraph g = make(5, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 4, 4}});
  const std::vector<Vertex> keep{1, 2, 3};
  const auto sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub.graph.num_vertices(), 3);
  ASSERT_EQ(sub.graph.num_edges(), 2);
  for (EdgeId e = 0; e < sub.graph.num_edges(); ++e) {
    EXPECT_EQ(sub.graph.edge(e).w, g.edge(sub.edge_new_to_old[static_cast<std::size_t>(e)]).w);
  }
  EXPECT_EQ(connected_components(make(4, {{0, 2, 1}})).size(), 3u);
}

}  // namespace
}  // namespace wcm
