#pragma once

#include <vector>

#include "wcm/graph.hpp"

namespace wcm {

/// Vertices c_0..c_{n-1} of a cycle in traversal order from vertex 0 and
/// edge_order[k] = edge between c_k and c_{k+1 mod n}.
struct CycleOrder {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

CycleOrder cycle_order(const WeightedGraph& g);

/// Best connected matching containing edges[anchor] of the given order.
/// The result is a contiguous alternating arc through the anchor.
Solution best_arc_through(const WeightedGraph& g, const CycleOrder& order, int anchor);

Solution solve_cycle(const WeightedGraph& g);

/// Paths go to the tree solver and cycles to solve_cycle.
Solution solve_degree_two(const WeightedGraph& g);

}  // namespace wcm
