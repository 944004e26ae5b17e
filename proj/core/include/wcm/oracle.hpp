#pragma once

#include <cstdint>
#include <vector>

#include "wcm/graph.hpp"

namespace wcm {

struct OracleResult {
  Weight optimum = 0;
  Matching witness;
  /// Vertex witness for the subgraph oracle; empty otherwise.
  std::vector<Vertex> vertices;
  std::uint64_t explored = 0;
};

/// Exhaustive maximum weight connected matching. Branches on edges in
/// descending weight order and prunes with an admissible upper bound.
OracleResult brute_mwcm(const WeightedGraph& g, int edge_limit = 24);

/// Exhaustive maximum weight connected induced subgraph over all 2^n sets.
OracleResult brute_wcs(const VertexWeightedGraph& g, int vertex_limit = 20);

/// Exhaustive maximum weight perfect matching (n even, n <= 12).
OracleResult brute_mwpm(const WeightedGraph& g);

}  // namespace wcm
