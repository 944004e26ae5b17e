#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wcm/graph.hpp"

namespace wcm {

struct TreeDecomposition {
  /// Each bag sorted ascending.
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int width() const;
};

/// Checks the tree shape and the three decomposition axioms. Returns the
/// width; throws Error naming the failed axiom and a witness.
int validate_td(const WeightedGraph& g, const TreeDecomposition& td);

enum class EliminationHeuristic { MinDegree, MinFill };

TreeDecomposition heuristic_td(const WeightedGraph& g,
                               EliminationHeuristic method = EliminationHeuristic::MinFill);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  /// Introduced or forgotten vertex; -1 for leaf and join.
  Vertex vertex = -1;
  std::vector<Vertex> bag;
  std::vector<int> children;
};

/// Nodes are stored children-first, so index order is a valid bottom-up
/// schedule. The root is the last node: an empty bag forgetting `pi`.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  Vertex pi = -1;

  int width() const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition& td, Vertex pi);

/// Checks node-kind invariants of a nice decomposition; throws on violation.
void validate_nice(const NiceTreeDecomposition& nice);

/// Equivalent plain decomposition (one bag per nice node).
TreeDecomposition flatten(const NiceTreeDecomposition& nice);

/// PACE .td text format, 1-based.
TreeDecomposition read_td(std::istream& in, int expected_vertices = -1);
void write_td(std::ostream& out, const TreeDecomposition& td, int num_vertices);

}  // namespace wcm
