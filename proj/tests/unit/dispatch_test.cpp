#include <gtest/gtest.h>

#include "generators.hpp"
#include "wcm/dispatch.hpp"
#include "wcm/oracle.hpp"

namespace wcm {
namespace {

TEST(Dispatch, RoutesByGraphClass) {
  testing::Rng rng(12);
  EXPECT_EQ(dispatch_solve(testing::random_tree(10, rng, -3, 5)).component_solvers,
            std::vector<SolverKind>{SolverKind::Tree});
  EXPECT_EQ(dispatch_solve(testing::cycle_graph({1, 2, 3, 4})).component_solvers,
            std::vector<SolverKind>{SolverKind::Cycle});
  EXPECT_EQ(dispatch_solve(testing::complete_graph(4, rng, 0, 5)).component_solvers,
            std::vector<SolverKind>{SolverKind::Chordal});
  EXPECT_EQ(dispatch_solve(testing::complete_graph(4, rng, -1, -1)).component_solvers,
            std::vector<SolverKind>{SolverKind::Brute});
  DispatchOptions small;
  small.brute_edge_limit = 3;
  EXPECT_EQ(dispatch_solve(testing::complete_graph(4, rng, -1, -1), small).component_solvers,
            std::vector<SolverKind>{SolverKind::Treewidth});
}

TEST(Dispatch, ForcedSolverPreconditions) {
  testing::Rng rng(13);
  DispatchOptions chordal;
  chordal.solver = SolverKind::Chordal;
  try {
    dispatch_solve(testing::complete_graph(4, rng, -1, -1), chordal);
    FAIL() << "negative weights accepted";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("non-negative"), std::string::npos);
  }
  DispatchOptions tree;
  tree.solver = SolverKind::Tree;
  EXPECT_THROW(dispatch_solve(testing::cycle_graph({1, 1, 1}), tree), Error);
  DispatchOptions with_td;
  with_td.solver = SolverKind::Brute;
  with_td.td = TreeDecomposition{{{0, 1}}, {}};
  EXPECT_THROW(dispatch_solve(testing::path_graph({1}), with_td), Error);
}

TEST(Dispatch, DisconnectedTakesBestComponent) {
  WeightedGraph g(7);
  g.add_edge(0, 1, 3);
  g.add_edge(2, 3, 4);
  g.add_edge(3, 4, 5);
  g.add_edge(4, 2, -1);
  const DispatchResult r = dispatch_solve(g);
  EXPECT_EQ(r.solution.optimum, 5);
  EXPECT_EQ(r.component_solvers.size(), 2u);
  EXPECT_EQ(r.solution.witness.recompute_weight(g), 5);
}

TEST(Dispatch, EverySolverAgreesWithOracle) {
  testing::Rng rng(14);
  for (int round = 0; round < 40; ++round) {
    const WeightedGraph g = testing::random_chordal(testing::uniform_int(rng, 2, 9), rng, 0, 8);
    if (g.num_edges() > 24) continue;
    const Weight expected = brute_mwcm(g).optimum;
    for (auto kind : {SolverKind::Auto, SolverKind::Brute, SolverKind::Chordal, SolverKind::Treewidth}) {
      DispatchOptions opts;
      opts.solver = kind;
      const DispatchResult r = dispatch_solve(g, opts);
      EXPECT_EQ(r.solution.optimum, expected);
      EXPECT_TRUE(verify_certificate(g, r.solution.witness, r.solution.optimum).accepted);
    }
  }
}

TEST(Verify, Thresholds) {
  const WeightedGraph p5 = testing::path_graph({2, 1, 1, 2});
  const Matching ends = Matching::from_edges(p5, {0, 3});
  EXPECT_FALSE(verify_certificate(p5, ends, 0).accepted);
  const Matching two = Matching::from_edges(p5, {0, 2});
  EXPECT_TRUE(verify_certificate(p5, two, 3).accepted);
  EXPECT_FALSE(verify_certificate(p5, two, 4).accepted);
}

TEST(SolverKindNames, RoundTrip) {
  for (auto kind : {SolverKind::Auto, SolverKind::Brute, SolverKind::Tree, SolverKind::Cycle, SolverKind::Chordal,
                    SolverKind::Treewidth}) {
    EXPECT_EQ(parse_solver_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_solver_kind("fast"), Error);
}

}  // namespace
}  // namespace wcm
