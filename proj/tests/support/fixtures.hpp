#pragma once

// Worked-example instances shared by unit and acceptance tests.

#include <utility>
#include <vector>

#include "wcm/reductions.hpp"

namespace wcm::testing {

/// (x1 ∨ ¬x2 ∨ ¬x4)(x1 ∨ ¬x3 ∨ x5)(¬x1 ∨ ¬x2 ∨ x4)(x2 ∨ x3 ∨ x5)
inline Cnf formula_b() { return {5, {{1, -2, -4}, {1, -3, 5}, {-1, -2, 4}, {2, 3, 5}}}; }

/// (x1 ∨ x2 ∨ x5)(x2 ∨ x3 ∨ x4)(¬x2 ∨ ¬x4 ∨ ¬x5)
inline Cnf monotone_formula() { return {5, {{1, 2, 5}, {2, 3, 4}, {-2, -4, -5}}}; }

/// Triangle a, b, c with terminals a, b and budget 1.
inline SteinerInstance steiner_triangle() {
  SteinerInstance s;
  s.graph = WeightedGraph(3);
  s.graph.add_edge(0, 1, 1);
  s.graph.add_edge(1, 2, 1);
  s.graph.add_edge(0, 2, 1);
  s.terminals = {0, 1};
  s.budget = 1;
  return s;
}

/// Vertices a..f, terminals a, c, d, budget 3.
inline SteinerInstance steiner_six() {
  SteinerInstance s;
  s.graph = WeightedGraph(6);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {0, 4}, {2, 4}, {3, 4}, {4, 5}, {2, 5}}) {
    s.graph.add_edge(u, v, 1);
  }
  s.terminals = {0, 2, 3};
  s.budget = 3;
  return s;
}

/// Vertices a..h; the best connected subgraph is {a,b,c,d,e} with weight 17.
inline VertexWeightedGraph wcs_fixture() {
  VertexWeightedGraph g({6, 2, -1, 6, 4, -7, -8, 5});
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 7}, {4, 6}, {6, 7}}) {
    g.add_edge(u, v);
  }
  return g;
}

/// U = {a..g}; sets {a,b,e}, {a,b,c,d}, {c,f}, {e,f,g}, {d}; budget 2.
inline SetCoverInstance cover_fixture() { return {7, {{0, 1, 4}, {0, 1, 2, 3}, {2, 5}, {4, 5, 6}, {3}}, 2}; }

}  // namespace wcm::testing
