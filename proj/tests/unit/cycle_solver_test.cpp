#include <gtest/gtest.h>

#include "generators.hpp"
#include "wcm/cycle_solver.hpp"
#include "wcm/oracle.hpp"

namespace wcm {
namespace {

/// Saturated vertices of a connected matching on a cycle form one arc in
/// which every second edge is matched.
void expect_alternating_arc(const WeightedGraph& g, const Matching& m) {
  const int n = g.num_vertices();
  if (m.empty()) return;
  const CycleOrder order = cycle_order(g);
  int runs = 0;
  for (int i = 0; i < n; ++i) {
    const bool sat = m.saturates(order.vertices[static_cast<std::size_t>(i)]);
    const bool prev = m.saturates(order.vertices[static_cast<std::size_t>((i + n - 1) % n)]);
    if (sat && !prev) ++runs;
  }
  EXPECT_LE(runs, 1);
}

TEST(SolveCycle, SmallExamples) {
  EXPECT_EQ(solve_cycle(testing::cycle_graph({1, 1, 1, 1})).optimum, 2);
  EXPECT_EQ(solve_cycle(testing::cycle_graph({5, -2, -3})).optimum, 5);
  EXPECT_EQ(solve_cycle(testing::cycle_graph({1, 1, 1, 1, 1, 1})).optimum, 3);
  EXPECT_EQ(solve_cycle(testing::cycle_graph({1, 1, 1, 1, 1})).optimum, 2);
  EXPECT_THROW(solve_cycle(testing::path_graph({1, 1})), Error);
}

TEST(SolveDegreeTwo, PathsAndTrivialGraphs) {
  EXPECT_EQ(solve_degree_two(testing::path_graph({4})).optimum, 4);
  EXPECT_EQ(solve_degree_two(WeightedGraph(1)).optimum, 0);
  WeightedGraph star(4);
  star.add_edge(0, 1, 1);
  star.add_edge(0, 2, 1);
  star.add_edge(0, 3, 1);
  EXPECT_THROW(solve_degree_two(star), Error);
}

TEST(SolveCycle, MatchesOracleOnAllSmallCycles) {
  testing::Rng rng(303);
  for (int n = 3; n <= 12; ++n) {
    for (int round = 0; round < 50; ++round) {
      std::vector<Weight> w(static_cast<std::size_t>(n));
      for (auto& x : w) x = testing::uniform(rng, -10, 10);
      const WeightedGraph g = testing::cycle_graph(w);
      const Solution s = solve_degree_two(g);
      ASSERT_EQ(s.optimum, brute_mwcm(g).optimum) << "n=" << n << " round " << round;
      EXPECT_EQ(s.witness.recompute_weight(g), s.optimum);
      EXPECT_TRUE(induced_by_matching_connected(g, s.witness));
      expect_alternating_arc(g, s.witness);
    }
  }
}

TEST(SolveCycle, RotationInvariance) {
  testing::Rng rng(17);
  for (int n = 3; n <= 10; ++n) {
    std::vector<Weight> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = testing::uniform(rng, -5, 7);
    const Weight base = solve_cycle(testing::cycle_graph(w)).optimum;
    for (int shift = 1; shift < n; ++shift) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      EXPECT_EQ(solve_cycle(testing::cycle_graph(w)).optimum, base);
    }
  }
}

TEST(BestArcThrough, ContainsAnchor) {
  const WeightedGraph g = testing::cycle_graph({2, -1, 3, -4, 5, 1, -2});
  const CycleOrder order = cycle_order(g);
  for (int a = 0; a < g.num_vertices(); ++a) {
    const Solution s = best_arc_through(g, order, a);
    const EdgeId anchor = order.edges[static_cast<std::size_t>(a)];
    EXPECT_TRUE(std::binary_search(s.witness.edges().begin(), s.witness.edges().end(), anchor));
    EXPECT_EQ(s.witness.recompute_weight(g), s.optimum);
  }
}

}  // namespace
}  // namespace wcm
