#include <gtest/gtest.h>

#include "generators.hpp"
#include "wcm/chordal_solver.hpp"
#include "wcm/oracle.hpp"
#include "wcm/perfect_matching.hpp"

namespace wcm {
namespace {

TEST(MaxWeightPerfectMatching, SmallExamples) {
  WeightedGraph k2(2);
  k2.add_edge(0, 1, 5);
  EXPECT_EQ(max_weight_perfect_matching(k2).weight(), 5);

  WeightedGraph k4(4);
  k4.add_edge(0, 1, 1);
  k4.add_edge(2, 3, 1);
  k4.add_edge(0, 2, 5);
  k4.add_edge(1, 3, 5);
  k4.add_edge(0, 3, 0);
  k4.add_edge(1, 2, 0);
  EXPECT_EQ(max_weight_perfect_matching(k4).weight(), 10);

  EXPECT_THROW(max_weight_perfect_matching(testing::path_graph({1, 1})), Error);
  WeightedGraph no_pm(4);
  no_pm.add_edge(0, 1, 1);
  no_pm.add_edge(0, 2, 1);
  no_pm.add_edge(0, 3, 1);
  EXPECT_THROW(max_weight_perfect_matching(no_pm), Error);
}

TEST(MaxWeightPerfectMatching, MatchesOracleOnCompleteGraphs) {
  testing::Rng rng(77);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 * testing::uniform_int(rng, 1, 5);
    const WeightedGraph g = testing::complete_graph(n, rng, -20, 20);
    const Matching m = max_weight_perfect_matching(g);
    ASSERT_EQ(m.size() * 2, static_cast<std::size_t>(n));
    ASSERT_EQ(m.weight(), brute_mwpm(g).optimum) << "round " << round;
  }
}

TEST(MaxWeightPerfectMatching, SparseGraphsWithPerfectMatchings) {
  testing::Rng rng(78);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 * testing::uniform_int(rng, 2, 5);
    WeightedGraph g = testing::random_connected(n, 0.4, rng, -9, 9);
    if (!g.find_edge(0, 1)) g.add_edge(0, 1, 0);
    for (Vertex v = 2; v + 1 < n; v += 2) {
      if (!g.find_edge(v, v + 1)) g.add_edge(v, v + 1, testing::uniform(rng, -9, 9));
    }
    ASSERT_EQ(max_weight_perfect_matching(g).weight(), brute_mwpm(g).optimum) << "round " << round;
  }
}

TEST(BuildGp, Shapes) {
  const ChordalCompletion p3 = build_gp(testing::path_graph({2, 3}));
  EXPECT_TRUE(p3.has_parity_vertex);
  EXPECT_EQ(p3.gp.num_vertices(), 4);
  EXPECT_EQ(p3.gp.num_edges(), 6);
  int fill = 0;
  for (EdgeId e = 0; e < p3.gp.num_edges(); ++e) {
    if (p3.original_edge[static_cast<std::size_t>(e)] == -1) {
      ++fill;
      EXPECT_EQ(p3.gp.edge(e).w, 0);
    }
  }
  EXPECT_EQ(fill, 4);

  testing::Rng rng(1);
  const ChordalCompletion k4 = build_gp(testing::complete_graph(4, rng, 1, 3));
  EXPECT_FALSE(k4.has_parity_vertex);
  EXPECT_EQ(k4.gp.num_edges(), 6);

  const ChordalCompletion k2 = build_gp(testing::path_graph({4}));
  EXPECT_EQ(k2.gp.num_vertices(), 2);
  EXPECT_EQ(k2.gp.num_edges(), 1);
}

TEST(SolveChordal, SmallExamples) {
  testing::Rng rng(2);
  EXPECT_EQ(solve_chordal(testing::complete_graph(4, rng, 1, 1)).optimum, 2);
  EXPECT_EQ(solve_chordal(testing::path_graph({0})).optimum, 0);
  EXPECT_THROW(solve_chordal(testing::path_graph({1, -1})), Error);
  EXPECT_THROW(solve_chordal(testing::cycle_graph({1, 1, 1, 1})), Error);
}

// Centre c (vertex 0) with three arms c-b-a; the heavy arm edges cannot all
// be kept once c is saturated.
TEST(SolveChordal, ArticulationOnFillEdge) {
  WeightedGraph spider(7);
  for (int arm = 0; arm < 3; ++arm) {
    const Vertex b = 1 + 2 * arm;
    spider.add_edge(0, b, 0);
    spider.add_edge(b, b + 1, 1);
  }
  const Solution s = solve_chordal(spider);
  EXPECT_EQ(s.optimum, 2);
  EXPECT_EQ(s.optimum, brute_mwcm(spider).optimum);
  EXPECT_TRUE(s.witness.saturates(0));
}

TEST(SolveChordal, MatchesOracle) {
  testing::Rng rng(404);
  for (int round = 0; round < 100; ++round) {
    const int n = testing::uniform_int(rng, 2, 12);
    const WeightedGraph g = testing::random_chordal(n, rng, 0, 10);
    if (g.num_edges() > 24) continue;
    const Solution s = solve_chordal(g);
    ASSERT_EQ(s.optimum, brute_mwcm(g).optimum) << "round " << round;
    EXPECT_EQ(s.witness.recompute_weight(g), s.optimum);
    EXPECT_TRUE(induced_by_matching_connected(g, s.witness));
  }
}

/// Some optimum connected matching saturates every articulation point.
TEST(ArticulationProperty, HoldsOnNonNegativeGraphs) {
  testing::Rng rng(505);
  for (int round = 0; round < 60; ++round) {
    const int n = testing::uniform_int(rng, 3, 9);
    const WeightedGraph g = testing::random_connected(n, 0.15, rng, 0, 6);
    if (g.num_edges() > 14) continue;
    const auto cuts = articulation_points(g);
    Weight best = -1;
    bool best_covers = false;
    const int m = g.num_edges();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<EdgeId> edges;
      for (int e = 0; e < m; ++e) {
        if ((mask >> e) & 1u) edges.push_back(e);
      }
      Matching mm;
      try {
        mm = Matching::from_edges(g, edges);
      } catch (const Error&) {
        continue;
      }
      if (!induced_by_matching_connected(g, mm)) continue;
      bool covers = true;
      for (Vertex c : cuts) covers = covers && mm.saturates(c);
      if (mm.weight() > best) {
        best = mm.weight();
        best_covers = covers;
      } else if (mm.weight() == best) {
        best_covers = best_covers || covers;
      }
    }
    EXPECT_TRUE(best_covers) << "round " << round;
  }
}

}  // namespace
}  // namespace wcm
