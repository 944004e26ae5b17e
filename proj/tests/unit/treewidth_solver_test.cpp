#include <gtest/gtest.h>

#include <map>
#include <tuple>

#include "generators.hpp"
#include "wcm/oracle.hpp"
#include "wcm/treewidth_solver.hpp"

namespace wcm {
namespace {

void expect_valid(const WeightedGraph& g, const Solution& s) {
  EXPECT_EQ(s.witness.recompute_weight(g), s.optimum);
  EXPECT_TRUE(induced_by_matching_connected(g, s.witness));
}

TEST(SolveTreewidth, SmallExamples) {
  EXPECT_EQ(solve_treewidth(testing::path_graph({6})).optimum, 6);
  EXPECT_EQ(solve_treewidth(testing::path_graph({2, 3})).optimum, 3);
  const WeightedGraph c4 = testing::cycle_graph({1, 1, 1, 1});
  const TreeDecomposition td{{{0, 1, 2}, {0, 2, 3}}, {{0, 1}}};
  const Solution s = solve_treewidth(c4, td);
  EXPECT_EQ(s.optimum, 2);
  expect_valid(c4, s);
  EXPECT_EQ(solve_treewidth(testing::path_graph({-4})).optimum, 0);
}

TEST(SolveTreewidth, RejectsInvalidDecomposition) {
  const WeightedGraph p3 = testing::path_graph({1, 1});
  EXPECT_THROW(solve_treewidth(p3, TreeDecomposition{{{0, 1}}, {}}), Error);
}

TEST(SolveTreewidth, MatchesOracle) {
  testing::Rng rng(707);
  for (int round = 0; round < 100; ++round) {
    const int n = testing::uniform_int(rng, 2, 10);
    const WeightedGraph g = testing::random_connected(n, 0.25, rng, -6, 10);
    if (g.num_edges() > 24) continue;
    TreewidthOptions opts;
    opts.check_size_bound = true;
    const Solution s = solve_treewidth(g, opts);
    ASSERT_EQ(s.optimum, brute_mwcm(g).optimum) << "round " << round;
    expect_valid(g, s);
  }
}

TEST(SolveTreewidth, EveryRootMatchesFullLoop) {
  testing::Rng rng(708);
  for (int round = 0; round < 20; ++round) {
    const WeightedGraph g = testing::random_connected(8, 0.3, rng, -4, 8);
    TreewidthOptions all_roots;
    all_roots.skip_earlier_roots = false;
    EXPECT_EQ(solve_treewidth(g, all_roots).optimum, solve_treewidth(g).optimum);
  }
}

TEST(SolveTreewidth, ReduceOnOffAgreeOnEveryCell) {
  testing::Rng rng(709);
  for (int round = 0; round < 30; ++round) {
    const int n = testing::uniform_int(rng, 2, 8);
    const WeightedGraph g = testing::random_connected(n, 0.3, rng, -5, 9);
    const TreeDecomposition td = heuristic_td(g);
    std::map<std::tuple<Vertex, int, int>, Weight> cells[2];
    Weight answers[2];
    for (int pass = 0; pass < 2; ++pass) {
      TreewidthOptions opts;
      opts.use_reduce = pass == 0;
      opts.observer = [&, pass](Vertex pi, int node, int cell, Weight best) {
        cells[pass][{pi, node, cell}] = best;
      };
      answers[pass] = solve_treewidth(g, td, opts).optimum;
    }
    EXPECT_EQ(answers[0], answers[1]);
    EXPECT_EQ(cells[0], cells[1]) << "round " << round;
  }
}

TEST(SolveTreewidth, PartialKTrees) {
  testing::Rng rng(710);
  for (int round = 0; round < 10; ++round) {
    const auto inst = testing::random_partial_ktree(11, 3, 0.5, rng, -5, 9);
    if (inst.graph.num_edges() > 24) continue;
    TreewidthStats stats;
    const Solution s = solve_treewidth(inst.graph, inst.td, {}, &stats);
    EXPECT_EQ(s.optimum, brute_mwcm(inst.graph).optimum);
    expect_valid(inst.graph, s);
    EXPECT_LE(stats.entries_after_reduce, stats.entries_before_reduce);
  }
}

TEST(CellIndex, BaseThree) {
  EXPECT_EQ(cell_index(0, 0, 3), 0);
  EXPECT_EQ(cell_index(1, 0, 1), 1);
  EXPECT_EQ(cell_index(0, 1, 1), 2);
  EXPECT_EQ(cell_index(0b10, 0b01, 2), 2 + 3);
}

}  // namespace
}  // namespace wcm
