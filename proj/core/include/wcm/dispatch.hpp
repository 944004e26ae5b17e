#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wcm/graph.hpp"
#include "wcm/tree_decomposition.hpp"
#include "wcm/treewidth_solver.hpp"

namespace wcm {

enum class SolverKind { Auto, Brute, Tree, Cycle, Chordal, Treewidth };

std::string to_string(SolverKind kind);
SolverKind parse_solver_kind(const std::string& name);

struct DispatchOptions {
  SolverKind solver = SolverKind::Auto;
  /// When set, the treewidth solver runs on the whole graph with this
  /// decomposition; only Auto and Treewidth accept one.
  std::optional<TreeDecomposition> td;
  int brute_edge_limit = 24;
  TreewidthOptions treewidth;
};

struct DispatchResult {
  Solution solution;
  /// Solver used for each connected component with at least one edge.
  std::vector<SolverKind> component_solvers;
};

/// Solves each connected component and keeps the best. Throws when a forced
/// solver's precondition fails on some component.
DispatchResult dispatch_solve(const WeightedGraph& g, const DispatchOptions& options = {});

struct VerifyResult {
  bool accepted = false;
  std::string reason;
};

/// Accepts iff G[V(m)] is connected and w(m) >= k. Edge existence and
/// disjointness are guaranteed by Matching.
VerifyResult verify_certificate(const WeightedGraph& g, const Matching& m, Weight k);

}  // namespace wcm
