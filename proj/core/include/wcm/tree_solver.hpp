#pragma once

#include <vector>

#include "wcm/graph.hpp"

namespace wcm {

/// Per-vertex DP values of a tree rooted at `root`.
///   B[v]    best connected matching of the subtree at v with v matched to a child
///   Bbar[v] sum over children u of max(B[u], 0)
///   b[v]    child achieving B[v], or -1 at leaves
struct TreeDpState {
  Vertex root = 0;
  std::vector<Weight> B;
  std::vector<Weight> Bbar;
  std::vector<Vertex> b;
  std::vector<Vertex> parent;
  /// Children of v are children_flat[child_begin[v] .. child_begin[v+1]).
  std::vector<int> child_begin;
  std::vector<Vertex> children_flat;
  /// Edge from v to its parent, -1 at the root.
  std::vector<EdgeId> parent_edge;

  std::span<const Vertex> children(Vertex v) const {
    const auto lo = static_cast<std::size_t>(child_begin[static_cast<std::size_t>(v)]);
    const auto hi = static_cast<std::size_t>(child_begin[static_cast<std::size_t>(v) + 1]);
    return std::span<const Vertex>(children_flat).subspan(lo, hi - lo);
  }
};

/// Fills the DP bottom-up; throws if g is not a connected tree.
TreeDpState tree_dp(const WeightedGraph& g, Vertex root = 0);

/// Matching of weight B[v] inside the subtree of v.
std::vector<EdgeId> tree_reconstruct(const WeightedGraph& g, const TreeDpState& st, Vertex v);

Solution solve_tree(const WeightedGraph& g);

}  // namespace wcm
