#pragma once

#include "wcm/graph.hpp"

namespace wcm {

/// Maximum weight perfect matching on a general graph (weighted blossom
/// algorithm, O(n^3)). Throws when n is odd or no perfect matching exists.
Matching max_weight_perfect_matching(const WeightedGraph& g);

}  // namespace wcm
