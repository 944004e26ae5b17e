#pragma once

#include <vector>

#include "wcm/graph.hpp"

namespace wcm {

/// Completion of G to an even-order complete graph. Vertex ids of G are kept;
/// the parity vertex, when present, is the last vertex.
struct ChordalCompletion {
  WeightedGraph gp;
  bool has_parity_vertex = false;
  /// original_edge[e] is the edge of G behind gp edge e, or -1 for fill edges.
  std::vector<EdgeId> original_edge;
};

ChordalCompletion build_gp(const WeightedGraph& g);

/// Requires a connected chordal graph with non-negative weights.
Solution solve_chordal(const WeightedGraph& g);

}  // namespace wcm
