#include "wcm/cycle_solver.hpp"

#include "wcm/tree_solver.hpp"

namespace wcm {

CycleOrder cycle_order(const WeightedGraph& g) {
  const int n = g.num_vertices();
  if (n < 3 || g.num_edges() != n || !is_connected(g)) throw Error("cycle solver requires a cycle");
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) throw Error("cycle solver requires a cycle");
  }
  CycleOrder c;
  Vertex cur = 0;
  EdgeId came = -1;
  for (int k = 0; k < n; ++k) {
    c.vertices.push_back(cur);
    const auto inc = g.incident(cur);
    const EdgeId next = inc[0] != came ? inc[0] : inc[1];
    c.edges.push_back(next);
    cur = g.other(next, cur);
    came = next;
  }
  return c;
}

Solution best_arc_through(const WeightedGraph& g, const CycleOrder& order, int anchor) {
  const int n = static_cast<int>(order.edges.size());
  auto f = [&](int k) { return order.edges[static_cast<std::size_t>(((anchor + k) % n + n) % n)]; };
  const int K = n / 2 - 1;

  // p[i]: forward every-other sums; s[j]: backward; smax[m] = max_{j<=m} s[j].
  std::vector<Weight> p(static_cast<std::size_t>(K) + 1, 0);
  std::vector<Weight> s(static_cast<std::size_t>(K) + 1, 0);
  std::vector<int> smax_arg(static_cast<std::size_t>(K) + 1, 0);
  for (int t = 1; t <= K; ++t) {
    p[static_cast<std::size_t>(t)] = p[static_cast<std::size_t>(t) - 1] + g.edge(f(2 * t)).w;
    s[static_cast<std::size_t>(t)] = s[static_cast<std::size_t>(t) - 1] + g.edge(f(n - 2 * t)).w;
    const int prev = smax_arg[static_cast<std::size_t>(t) - 1];
    smax_arg[static_cast<std::size_t>(t)] = s[static_cast<std::size_t>(t)] > s[static_cast<std::size_t>(prev)] ? t : prev;
  }
  int best_i = 0;
  int best_j = smax_arg[static_cast<std::size_t>(K)];
  Weight best = p[0] + s[static_cast<std::size_t>(best_j)];
  for (int i = 1; i <= K; ++i) {
    const int j = smax_arg[static_cast<std::size_t>(K - i)];
    const Weight v = p[static_cast<std::size_t>(i)] + s[static_cast<std::size_t>(j)];
    if (v > best) {
      best = v;
      best_i = i;
      best_j = j;
    }
  }
  std::vector<EdgeId> edges{f(0)};
  for (int t = 1; t <= best_i; ++t) edges.push_back(f(2 * t));
  for (int t = 1; t <= best_j; ++t) edges.push_back(f(n - 2 * t));
  Solution sol;
  sol.witness = Matching::from_edges(g, std::move(edges));
  sol.optimum = sol.witness.weight();
  return sol;
}

Solution solve_cycle(const WeightedGraph& g) {
  const CycleOrder order = cycle_order(g);
  const int n = g.num_vertices();
  Solution best;
  for (int anchor : {n - 1, n - 2}) {
    Solution cand = best_arc_through(g, order, anchor);
    if (cand.optimum > best.optimum) best = std::move(cand);
  }
  // Neither anchor matched: the shared vertex c_{n-1} is unsaturated.
  std::vector<Vertex> keep(order.vertices.begin(), order.vertices.end() - 1);
  const InducedSubgraph path = induced_subgraph(g, keep);
  const Solution on_path = solve_tree(path.graph);
  if (on_path.optimum > best.optimum) {
    std::vector<EdgeId> edges;
    for (EdgeId e : on_path.witness.edges()) edges.push_back(path.edge_new_to_old[static_cast<std::size_t>(e)]);
    best.witness = Matching::from_edges(g, std::move(edges));
    best.optimum = on_path.optimum;
  }
  return best;
}

Solution solve_degree_two(const WeightedGraph& g) {
  if (g.max_degree() > 2) throw Error("degree-two solver requires maximum degree at most 2");
  if (!is_connected(g)) throw Error("degree-two solver requires a connected graph");
  if (g.num_edges() == g.num_vertices() - 1) return solve_tree(g);
  return solve_cycle(g);
}

}  // namespace wcm
