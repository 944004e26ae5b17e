#include "wcm/dispatch.hpp"

#include "wcm/chordal_solver.hpp"
#include "wcm/cycle_solver.hpp"
#include "wcm/oracle.hpp"
#include "wcm/tree_solver.hpp"

namespace wcm {

namespace {

SolverKind pick(const WeightedGraph& g, const GraphClassReport& cls, int brute_edge_limit) {
  if (cls.is_tree) return SolverKind::Tree;
  if (cls.max_degree <= 2) return SolverKind::Cycle;
  if (cls.chordal() && cls.all_weights_nonnegative) return SolverKind::Chordal;
  if (g.num_edges() <= brute_edge_limit) return SolverKind::Brute;
  return SolverKind::Treewidth;
}

void check_forced(SolverKind kind, const WeightedGraph& g, const GraphClassReport& cls, int brute_edge_limit) {
  switch (kind) {
    case SolverKind::Tree:
      if (!cls.is_tree) throw Error("tree solver needs a tree");
      break;
    case SolverKind::Cycle:
      if (cls.max_degree > 2) throw Error("cycle solver needs maximum degree at most 2");
      break;
    case SolverKind::Chordal:
      if (!cls.chordal()) throw Error("chordal solver needs a chordal graph");
      if (!cls.all_weights_nonnegative) throw Error("chordal solver needs non-negative edge weights");
      break;
    case SolverKind::Brute:
      if (g.num_edges() > brute_edge_limit) {
        throw Error("brute force limited to " + std::to_string(brute_edge_limit) + " edges, component has " +
                    std::to_string(g.num_edges()));
      }
      break;
    default:
      break;
  }
}

Solution run(SolverKind kind, const WeightedGraph& g, const DispatchOptions& options) {
  switch (kind) {
    case SolverKind::Tree:
      return solve_tree(g);
    case SolverKind::Cycle:
      return solve_degree_two(g);
    case SolverKind::Chordal:
      return solve_chordal(g);
    case SolverKind::Brute: {
      auto r = brute_mwcm(g, options.brute_edge_limit);
      return {r.optimum, std::move(r.witness)};
    }
    case SolverKind::Treewidth:
      return solve_treewidth(g, options.treewidth);
    case SolverKind::Auto:
      break;
  }
  throw Error("no solver selected");
}

}  // namespace

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::Auto:
      return "auto";
    case SolverKind::Brute:
      return "brute";
    case SolverKind::Tree:
      return "tree";
    case SolverKind::Cycle:
      return "cycle";
    case SolverKind::Chordal:
      return "chordal";
    case SolverKind::Treewidth:
      return "treewidth";
  }
  return "unknown";
}

SolverKind parse_solver_kind(const std::string& name) {
  for (auto kind : {SolverKind::Auto, SolverKind::Brute, SolverKind::Tree, SolverKind::Cycle, SolverKind::Chordal,
                    SolverKind::Treewidth}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error("unknown solver '" + name + "'");
}

DispatchResult dispatch_solve(const WeightedGraph& g, const DispatchOptions& options) {
  DispatchResult result;
  if (options.td) {
    if (options.solver != SolverKind::Auto && options.solver != SolverKind::Treewidth) {
      throw Error("a tree decomposition was given but solver '" + to_string(options.solver) + "' does not use one");
    }
    result.solution = solve_treewidth(g, *options.td, options.treewidth);
    result.component_solvers.push_back(SolverKind::Treewidth);
    return result;
  }
  for (const auto& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    if (sub.graph.num_edges() == 0) continue;
    const GraphClassReport cls = classify(sub.graph);
    SolverKind kind = options.solver;
    if (kind == SolverKind::Auto) {
      kind = pick(sub.graph, cls, options.brute_edge_limit);
    } else {
      check_forced(kind, sub.graph, cls, options.brute_edge_limit);
    }
    result.component_solvers.push_back(kind);
    Solution s = run(kind, sub.graph, options);
    if (s.optimum > result.solution.optimum) {
      std::vector<EdgeId> edges;
      for (EdgeId e : s.witness.edges()) edges.push_back(sub.edge_new_to_old[static_cast<std::size_t>(e)]);
      result.solution.optimum = s.optimum;
      result.solution.witness = Matching::from_edges(g, std::move(edges));
    }
  }
  return result;
}

VerifyResult verify_certificate(const WeightedGraph& g, const Matching& m, Weight k) {
  if (!induced_by_matching_connected(g, m)) return {false, "G[V(M)] is not connected"};
  if (m.weight() < k) {
    return {false, "weight " + std::to_string(m.weight()) + " is below " + std::to_string(k)};
  }
  return {true, {}};
}

}  // namespace wcm
