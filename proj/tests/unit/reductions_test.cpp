#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "wcm/dispatch.hpp"
#include "wcm/oracle.hpp"
#include "wcm/reductions.hpp"

namespace wcm {
namespace {

using testing::cover_fixture;
using testing::formula_b;
using testing::monotone_formula;
using testing::steiner_six;
using testing::steiner_triangle;
using testing::wcs_fixture;

constexpr int kBruteLimit = 120;

std::set<Weight> weight_alphabet(const WeightedGraph& g) {
  std::set<Weight> out;
  for (const Edge& e : g.edges()) out.insert(e.w);
  return out;
}

bool subset_of(const std::set<Weight>& s, std::set<Weight> allowed) {
  for (Weight w : s) {
    if (!allowed.count(w)) return false;
  }
  return true;
}

void expect_verifies(const LabeledInstance& inst, const Matching& m) {
  const VerifyResult v = verify_certificate(inst.graph, m, inst.k);
  EXPECT_TRUE(v.accepted) << v.reason;
}

TEST(Sat, Helpers) {
  const Cnf f = formula_b();
  EXPECT_TRUE(satisfies(f, {false, true, false, false, true}));
  EXPECT_FALSE(satisfies(f, {false, false, false, false, false}));
  EXPECT_TRUE(solve_sat_exhaustive(f));
  EXPECT_FALSE(solve_sat_exhaustive(Cnf{1, {{1}, {-1}}}));
}

TEST(Starlike, Example) {
  const LabeledInstance inst = gen_starlike(formula_b());
  EXPECT_EQ(inst.k, 9);
  EXPECT_EQ(inst.graph.num_vertices(), 23);
  EXPECT_TRUE(classify(inst.graph).chordal());
  EXPECT_TRUE(subset_of(weight_alphabet(inst.graph), {-1, 1}));

  const Matching lifted = lift_certificate(inst, Assignment{false, true, false, false, true});
  EXPECT_EQ(lifted.weight(), 9);
  expect_verifies(inst, lifted);
  const auto back = std::get<Assignment>(project_certificate(inst, lifted));
  EXPECT_EQ(back, (Assignment{false, true, false, false, true}));

  const auto r = brute_mwcm(inst.graph, kBruteLimit);
  EXPECT_EQ(r.optimum, 9);
  EXPECT_TRUE(satisfies(formula_b(), std::get<Assignment>(project_certificate(inst, r.witness))));
  EXPECT_THROW(lift_certificate(inst, Assignment{false, false, false, false, false}), Error);
}

TEST(Starlike, SmallCases) {
  const LabeledInstance one = gen_starlike(Cnf{3, {{1, 2, 3}}});
  EXPECT_EQ(one.graph.num_vertices(), 11);
  EXPECT_EQ(one.k, 4);
  EXPECT_EQ(brute_mwcm(one.graph, kBruteLimit).optimum, 4);

  const LabeledInstance tri = gen_starlike(Cnf{1, {}});
  EXPECT_EQ(tri.graph.num_vertices(), 3);
  EXPECT_TRUE(classify(tri.graph).is_cycle);
  EXPECT_EQ(tri.k, 1);
  EXPECT_EQ(brute_mwcm(tri.graph).optimum, 1);

  EXPECT_THROW(gen_starlike(Cnf{4, {{1, 2, 3, 4}}}), Error);
  EXPECT_THROW(gen_starlike(Cnf{2, {{1, 2, 3}}}), Error);
}

TEST(Bip4, Example) {
  const LabeledInstance inst = gen_bip4(formula_b());
  EXPECT_EQ(inst.k, 10);
  const auto cls = classify(inst.graph);
  EXPECT_TRUE(cls.bipartite());
  EXPECT_LE(diameter(inst.graph), 4);
  EXPECT_TRUE(subset_of(weight_alphabet(inst.graph), {0, 1}));

  const Matching lifted = lift_certificate(inst, Assignment{false, true, false, false, true});
  EXPECT_EQ(lifted.weight(), 10);
  expect_verifies(inst, lifted);

  const auto r = brute_mwcm(inst.graph, kBruteLimit);
  EXPECT_EQ(r.optimum, 10);
  EXPECT_TRUE(satisfies(formula_b(), std::get<Assignment>(project_certificate(inst, r.witness))));
}

TEST(Bip4, OneClause) {
  const LabeledInstance inst = gen_bip4(Cnf{3, {{1, -2, 3}}});
  EXPECT_EQ(inst.k, 5);
  EXPECT_EQ(brute_mwcm(inst.graph, kBruteLimit).optimum, 5);
}

TEST(PlanarBipartite, Example) {
  const LabeledInstance inst = gen_planar_bipartite(monotone_formula());
  EXPECT_EQ(inst.k, 13);
  EXPECT_TRUE(classify(inst.graph).bipartite());
  EXPECT_TRUE(subset_of(weight_alphabet(inst.graph), {0, 1}));

  const Assignment paper{true, false, true, true, true};
  const Matching lifted = lift_certificate(inst, paper);
  EXPECT_EQ(lifted.weight(), 13);
  expect_verifies(inst, lifted);
  EXPECT_EQ(std::get<Assignment>(project_certificate(inst, lifted)), paper);

  const auto r = brute_mwcm(inst.graph, kBruteLimit);
  EXPECT_EQ(r.optimum, 13);
  EXPECT_TRUE(satisfies(monotone_formula(), std::get<Assignment>(project_certificate(inst, r.witness))));
}

TEST(PlanarBipartite, SingleClauseAndErrors) {
  const LabeledInstance inst = gen_planar_bipartite(Cnf{3, {{1, 2, 3}}});
  EXPECT_EQ(inst.k, 7);
  EXPECT_EQ(brute_mwcm(inst.graph, kBruteLimit).optimum, 7);
  try {
    gen_planar_bipartite(Cnf{3, {{1, 2, 3}, {1, -2, 3}}});
    FAIL() << "mixed clause accepted";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("clause 2"), std::string::npos);
  }
}

TEST(PlanarSubcubic, TriangleExample) {
  const SteinerInstance src = steiner_triangle();
  const SteinerParams p = steiner_params(src);
  EXPECT_EQ(p.q, 2);
  EXPECT_EQ(p.p, 3);
  EXPECT_EQ(p.r, 10);
  EXPECT_EQ(p.k, 17);

  const LabeledInstance inst = gen_planar_subcubic(src);
  EXPECT_EQ(inst.k, 17);
  EXPECT_EQ(inst.graph.num_edges(), 65);
  EXPECT_LE(inst.graph.max_degree(), 3);
  EXPECT_TRUE(subset_of(weight_alphabet(inst.graph), {-1, 1}));

  const SteinerTree ab{{0, 1}, {{0, 1}}};
  const Matching lifted = lift_certificate(inst, ab);
  EXPECT_EQ(lifted.weight(), 17);
  expect_verifies(inst, lifted);

  const auto r = brute_mwcm(inst.graph, kBruteLimit);
  EXPECT_EQ(r.optimum, 17);
  const auto tree = std::get<SteinerTree>(project_certificate(inst, r.witness));
  EXPECT_EQ(tree.vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(tree.edges, (std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
}

TEST(PlanarSubcubic, SixVertexExample) {
  const SteinerInstance src = steiner_six();
  const SteinerParams p = steiner_params(src);
  EXPECT_EQ(p.q, 4);
  EXPECT_EQ(p.p, 13);
  EXPECT_EQ(p.r, 105);
  EXPECT_EQ(p.k, 276);

  const LabeledInstance inst = gen_planar_subcubic(src);
  EXPECT_LE(inst.graph.max_degree(), 3);
  EXPECT_TRUE(subset_of(weight_alphabet(inst.graph), {-1, 1}));
  const SteinerTree acde{{0, 2, 3, 4}, {{0, 4}, {2, 4}, {3, 4}}};
  ASSERT_TRUE(check_steiner_tree(src, acde).empty());
  const Matching lifted = lift_certificate(inst, acde);
  EXPECT_GE(lifted.weight(), inst.k);
  expect_verifies(inst, lifted);
  const auto back = std::get<SteinerTree>(project_certificate(inst, lifted));
  EXPECT_EQ(back.vertices, acde.vertices);
  EXPECT_EQ(back.edges, acde.edges);
}

TEST(PlanarSubcubic, Errors) {
  SteinerInstance none = steiner_triangle();
  none.terminals.clear();
  EXPECT_THROW(gen_planar_subcubic(none), Error);
  SteinerInstance bad = steiner_triangle();
  bad.terminals = {0, 5};
  EXPECT_THROW(gen_planar_subcubic(bad), Error);
}

TEST(PlanarSubcubic, EquivalenceOnTinyInputs) {
  SteinerInstance p3;
  p3.graph = testing::path_graph({1, 1});
  std::vector<SteinerInstance> bases{steiner_triangle(), p3};
  for (auto base : bases) {
    for (const auto& terminals : std::vector<std::vector<Vertex>>{{0, 1}, {0, 2}, {0, 1, 2}}) {
      for (int budget = 1; budget <= 3; ++budget) {
        SteinerInstance src = base;
        src.terminals = terminals;
        src.budget = budget;
        const LabeledInstance inst = gen_planar_subcubic(src);
        const bool yes = solve_steiner_exhaustive(src).has_value();
        const Weight best = brute_mwcm(inst.graph, kBruteLimit).optimum;
        EXPECT_EQ(yes, best >= inst.k) << "budget " << budget << " terminals " << terminals.size();
      }
    }
  }
}

TEST(CrossComposition, TwoInstances) {
  const std::vector<Cnf> both{{2, {{1, 2}}}, {2, {{-1, 2}}}};
  const LabeledInstance inst = gen_crosscomp(both);
  EXPECT_EQ(inst.k, 6);
  EXPECT_TRUE(classify(inst.graph).bipartite());
  EXPECT_TRUE(subset_of(weight_alphabet(inst.graph), {0, 1}));
  const auto r = brute_mwcm(inst.graph, kBruteLimit);
  EXPECT_GE(r.optimum, inst.k);
  const auto cert = std::get<CrossCompositionCertificate>(project_certificate(inst, r.witness));
  EXPECT_TRUE(satisfies(both[static_cast<std::size_t>(cert.instance)], cert.assignment));

  const Matching lifted = lift_certificate(inst, CrossCompositionCertificate{1, {false, true}});
  EXPECT_EQ(lifted.weight(), inst.k);
  expect_verifies(inst, lifted);
}

TEST(CrossComposition, UnsatisfiableInstances) {
  const std::vector<Cnf> both{{1, {{1}, {-1}}}, {1, {{-1}, {1}}}};
  const LabeledInstance inst = gen_crosscomp(both);
  EXPECT_LT(brute_mwcm(inst.graph, kBruteLimit).optimum, inst.k);
  EXPECT_THROW(gen_crosscomp({{1, {{1}}}, {2, {{1}}}}), Error);
}

TEST(CrossComposition, SingleInstance) {
  testing::Rng rng(31);
  for (int round = 0; round < 10; ++round) {
    const Cnf f = testing::random_cnf(3, testing::uniform_int(rng, 1, 3), 2, rng);
    const LabeledInstance inst = gen_crosscomp({f});
    EXPECT_EQ(solve_sat_exhaustive(f).has_value(), brute_mwcm(inst.graph, kBruteLimit).optimum >= inst.k);
  }
}

TEST(WcsToWcm, Example) {
  const VertexWeightedGraph g = wcs_fixture();
  const LabeledInstance inst = gen_wcs_to_wcm(g, 17);
  EXPECT_EQ(inst.k, 17);
  EXPECT_EQ(inst.graph.edge(*inst.graph.find_edge(inst.at("vert.1"), inst.at("vert.2"))).w, -24);
  const auto wcs = brute_wcs(g);
  EXPECT_EQ(wcs.optimum, 17);
  EXPECT_EQ(wcs.vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  const auto r = brute_mwcm(inst.graph, kBruteLimit);
  EXPECT_EQ(r.optimum, 17);
  EXPECT_EQ(std::get<std::vector<Vertex>>(project_certificate(inst, r.witness)), wcs.vertices);

  const Matching lifted = lift_certificate(inst, wcs.vertices);
  EXPECT_EQ(lifted.weight(), 17);
  expect_verifies(inst, lifted);
}

TEST(WcsToWcm, SingleVertexAndSweep) {
  const LabeledInstance one = gen_wcs_to_wcm(VertexWeightedGraph({5}), 5);
  EXPECT_EQ(one.graph.num_vertices(), 2);
  ASSERT_EQ(one.graph.num_edges(), 1);
  EXPECT_EQ(one.graph.edge(0).w, 5);

  testing::Rng rng(41);
  for (int round = 0; round < 40; ++round) {
    const VertexWeightedGraph g = testing::random_vertex_weighted(testing::uniform_int(rng, 1, 7), 0.2, rng, -6, 6);
    const LabeledInstance inst = gen_wcs_to_wcm(g, 0);
    if (inst.graph.num_edges() > 24) continue;
    EXPECT_EQ(brute_wcs(g).optimum, brute_mwcm(inst.graph).optimum) << "round " << round;
  }
}

TEST(SetCoverToWcs, Example) {
  const SetCoverInstance sc = cover_fixture();
  const WcsInstance w = gen_setcover_to_wcs(sc);
  EXPECT_EQ(w.k, 46);
  EXPECT_EQ(w.graph.num_vertices(), 13);
  const auto vs = lift_set_cover(w, sc, {1, 3});
  Weight total = 0;
  for (Vertex v : vs) total += w.graph.weight(v);
  EXPECT_EQ(total, 62);
  EXPECT_EQ(project_set_cover(w, sc, vs), (SetFamily{1, 3}));
  EXPECT_GE(brute_wcs(w.graph).optimum, w.k);
}

TEST(SetCoverToWcs, Tiny) {
  const SetCoverInstance sc{1, {{0}}, 1};
  const WcsInstance w = gen_setcover_to_wcs(sc);
  EXPECT_EQ(w.k, 3);
  const auto r = brute_wcs(w.graph);
  EXPECT_EQ(r.optimum, 3);
  EXPECT_EQ(r.vertices.size(), 3u);
  EXPECT_THROW(gen_setcover_to_wcs(SetCoverInstance{2, {{0}}, 1}), Error);
}

TEST(AttachSource, DetectsMismatch) {
  const LabeledInstance inst = gen_starlike(formula_b());
  const LabeledInstance again = attach_source(inst.kind, inst.graph, inst.k, inst.labels, formula_b());
  EXPECT_EQ(again.at("c.4-"), inst.at("c.4-"));
  EXPECT_THROW(attach_source(inst.kind, inst.graph, inst.k, inst.labels, monotone_formula()), Error);
  EXPECT_THROW(attach_source(inst.kind, inst.graph, inst.k + 1, inst.labels, formula_b()), Error);
  auto labels = inst.labels;
  std::swap(labels[0], labels[5]);
  EXPECT_THROW(attach_source(inst.kind, inst.graph, inst.k, labels, formula_b()), Error);
}

TEST(Generators, StructuralInvariantsOnRandomFormulas) {
  testing::Rng rng(51);
  for (int round = 0; round < 20; ++round) {
    const Cnf f = testing::random_cnf(testing::uniform_int(rng, 3, 6), testing::uniform_int(rng, 1, 5), 3, rng);
    const LabeledInstance star = gen_starlike(f);
    EXPECT_TRUE(classify(star.graph).chordal());
    EXPECT_TRUE(subset_of(weight_alphabet(star.graph), {-1, 1}));
    const LabeledInstance bip = gen_bip4(f);
    EXPECT_TRUE(classify(bip.graph).bipartite());
    EXPECT_LE(diameter(bip.graph), 4);
    EXPECT_TRUE(subset_of(weight_alphabet(bip.graph), {0, 1}));
    const Cnf mono = testing::random_cnf(f.num_vars, static_cast<int>(f.clauses.size()), 3, rng, true);
    const LabeledInstance pb = gen_planar_bipartite(mono);
    EXPECT_TRUE(classify(pb.graph).bipartite());
    EXPECT_TRUE(subset_of(weight_alphabet(pb.graph), {0, 1}));
  }
}

}  // namespace
}  // namespace wcm
