#include "wcm/chordal_solver.hpp"

#include <algorithm>

#include "wcm/perfect_matching.hpp"

namespace wcm {

ChordalCompletion build_gp(const WeightedGraph& g) {
  const int n = g.num_vertices();
  ChordalCompletion c;
  c.has_parity_vertex = n % 2 == 1;
  c.gp = WeightedGraph(c.has_parity_vertex ? n + 1 : n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    c.gp.add_edge(ed.u, ed.v, ed.w);
    c.original_edge.push_back(e);
  }
  const int np = c.gp.num_vertices();
  for (Vertex u = 0; u < np; ++u) {
    for (Vertex v = u + 1; v < np; ++v) {
      if (u < n && v < n && g.find_edge(u, v)) continue;
      c.gp.add_edge(u, v, 0);
      c.original_edge.push_back(-1);
    }
  }
  return c;
}

namespace {

/// Copy of G_p in which fill edges at articulations of G cost more than the
/// total positive weight, so a maximum perfect matching saturates every
/// articulation through an edge of G.
WeightedGraph penalise_articulation_fill(const WeightedGraph& g, const ChordalCompletion& c) {
  std::vector<char> cut(static_cast<std::size_t>(c.gp.num_vertices()), 0);
  for (Vertex v : articulation_points(g)) cut[static_cast<std::size_t>(v)] = 1;
  Weight positive = 0;
  for (const Edge& e : g.edges()) positive += std::max<Weight>(e.w, 0);
  WeightedGraph out(c.gp.num_vertices());
  for (EdgeId e = 0; e < c.gp.num_edges(); ++e) {
    const Edge& ed = c.gp.edge(e);
    const bool fill = c.original_edge[static_cast<std::size_t>(e)] == -1;
    const bool at_cut = cut[static_cast<std::size_t>(ed.u)] || cut[static_cast<std::size_t>(ed.v)];
    out.add_edge(ed.u, ed.v, fill && at_cut ? -(positive + 1) : ed.w);
  }
  return out;
}

}  // namespace

Solution solve_chordal(const WeightedGraph& g) {
  const GraphClassReport report = classify(g);
  if (!report.connected) throw Error("chordal solver requires a connected graph");
  if (!report.all_weights_nonnegative) throw Error("chordal solver requires non-negative weights");
  if (!report.chordal()) throw Error("chordal solver requires a chordal graph");

  const ChordalCompletion c = build_gp(g);
  const Matching mp = max_weight_perfect_matching(penalise_articulation_fill(g, c));
  std::vector<EdgeId> edges;
  std::vector<char> saturated(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId e : mp.edges()) {
    const EdgeId orig = c.original_edge[static_cast<std::size_t>(e)];
    if (orig == -1) continue;
    edges.push_back(orig);
    saturated[static_cast<std::size_t>(g.edge(orig).u)] = 1;
    saturated[static_cast<std::size_t>(g.edge(orig).v)] = 1;
  }
  // Saturate remaining pairs joined by weight-0 edges of G, scanning (u,v)
  // pairs in ascending order.
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (saturated[static_cast<std::size_t>(u)]) continue;
    Vertex best = -1;
    EdgeId best_edge = -1;
    for (EdgeId e : g.incident(u)) {
      const Vertex v = g.other(e, u);
      if (v > u && !saturated[static_cast<std::size_t>(v)] && g.edge(e).w == 0 && (best == -1 || v < best)) {
        best = v;
        best_edge = e;
      }
    }
    if (best == -1) continue;
    edges.push_back(best_edge);
    saturated[static_cast<std::size_t>(u)] = saturated[static_cast<std::size_t>(best)] = 1;
  }
  Solution sol;
  sol.witness = Matching::from_edges(g, std::move(edges));
  sol.optimum = sol.witness.weight();
  if (sol.optimum != mp.weight()) throw Error("chordal extraction lost weight");
  if (!induced_by_matching_connected(g, sol.witness)) throw Error("chordal extraction produced a disconnected matching");
  return sol;
}

}  // namespace wcm
