#include <gtest/gtest.h>

#include "generators.hpp"
#include "naive.hpp"
#include "wcm/oracle.hpp"

namespace wcm {
namespace {

TEST(BruteMwcm, SmallExamples) {
  WeightedGraph k2(2);
  k2.add_edge(0, 1, -3);
  const auto r = brute_mwcm(k2);
  EXPECT_EQ(r.optimum, 0);
  EXPECT_TRUE(r.witness.empty());

  EXPECT_EQ(brute_mwcm(testing::path_graph({2, 3})).optimum, 3);
  const auto p4 = brute_mwcm(testing::path_graph({3, -1, 4}));
  EXPECT_EQ(p4.optimum, 7);
  EXPECT_EQ(p4.witness.size(), 2u);
}

TEST(BruteMwcm, RefusesLargeInputs) {
  testing::Rng rng(3);
  const WeightedGraph g = testing::complete_graph(8, rng, 0, 1);
  EXPECT_THROW(brute_mwcm(g, 10), Error);
}

TEST(BruteMwcm, AgreesWithSubsetEnumeration) {
  testing::Rng rng(2024);
  for (int round = 0; round < 150; ++round) {
    const int n = testing::uniform_int(rng, 2, 9);
    const WeightedGraph g = testing::random_connected(n, 0.3, rng, -4, 6);
    if (g.num_edges() > 16) continue;
    const auto r = brute_mwcm(g);
    ASSERT_EQ(r.optimum, testing::naive_mwcm(g)) << "round " << round;
    EXPECT_EQ(r.witness.weight(), r.optimum);
    EXPECT_TRUE(induced_by_matching_connected(g, r.witness));
  }
}

TEST(BruteWcs, SmallExamples) {
  EXPECT_EQ(brute_wcs(VertexWeightedGraph({5})).optimum, 5);

  VertexWeightedGraph tri({1, -1, 1});
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  EXPECT_EQ(brute_wcs(tri).optimum, 2);

  VertexWeightedGraph path({4, -5, 4});
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  const auto r = brute_wcs(path);
  EXPECT_EQ(r.optimum, 4);
  EXPECT_EQ(r.vertices.size(), 1u);
}

TEST(BruteMwpm, SmallExamples) {
  WeightedGraph k2(2);
  k2.add_edge(0, 1, 5);
  EXPECT_EQ(brute_mwpm(k2).optimum, 5);

  WeightedGraph k4(4);
  k4.add_edge(0, 1, 1);
  k4.add_edge(2, 3, 1);
  k4.add_edge(0, 2, 5);
  k4.add_edge(1, 3, 5);
  k4.add_edge(0, 3, 0);
  k4.add_edge(1, 2, 0);
  const auto r = brute_mwpm(k4);
  EXPECT_EQ(r.optimum, 10);
  EXPECT_EQ(r.witness.size(), 2u);

  EXPECT_THROW(brute_mwpm(testing::path_graph({1, 1})), Error);
}

}  // namespace
}  // namespace wcm
