#include "wcm/tree_solver.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace wcm {

TreeDpState tree_dp(const WeightedGraph& g, Vertex root) {
  const int n = g.num_vertices();
  if (n == 0 || g.num_edges() != n - 1) throw Error("tree solver requires a connected tree");
  if (!g.has_vertex(root)) throw Error("root out of range: " + std::to_string(root));
  const auto N = static_cast<std::size_t>(n);

  TreeDpState st;
  st.root = root;
  st.parent.assign(N, -1);
  st.parent_edge.assign(N, -1);
  std::vector<Vertex> order;
  order.reserve(N);
  std::vector<char> seen(N, 0);
  order.push_back(root);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    for (EdgeId e : g.incident(v)) {
      const Vertex u = g.other(e, v);
      if (seen[static_cast<std::size_t>(u)]) continue;
      seen[static_cast<std::size_t>(u)] = 1;
      st.parent[static_cast<std::size_t>(u)] = v;
      st.parent_edge[static_cast<std::size_t>(u)] = e;
      order.push_back(u);
    }
  }
  if (order.size() != N) throw Error("tree solver requires a connected tree");

  st.child_begin.assign(N + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (v != root) ++st.child_begin[static_cast<std::size_t>(st.parent[static_cast<std::size_t>(v)]) + 1];
  }
  for (std::size_t i = 0; i < N; ++i) st.child_begin[i + 1] += st.child_begin[i];
  st.children_flat.assign(N > 0 ? N - 1 : 0, -1);
  {
    std::vector<int> fill(st.child_begin.begin(), st.child_begin.end() - 1);
    for (Vertex v = 0; v < n; ++v) {
      if (v == root) continue;
      const auto p = static_cast<std::size_t>(st.parent[static_cast<std::size_t>(v)]);
      st.children_flat[static_cast<std::size_t>(fill[p]++)] = v;
    }
  }

  st.B.assign(N, 0);
  st.Bbar.assign(N, 0);
  st.b.assign(N, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const auto kids = st.children(v);
    if (kids.empty()) continue;
    Weight bbar = 0;
    for (Vertex u : kids) bbar += std::max<Weight>(st.B[static_cast<std::size_t>(u)], 0);
    Weight best = std::numeric_limits<Weight>::min();
    Vertex arg = -1;
    for (Vertex u : kids) {
      const auto ui = static_cast<std::size_t>(u);
      const Weight f = st.Bbar[ui] + g.edge(st.parent_edge[ui]).w + (bbar - std::max<Weight>(st.B[ui], 0));
      if (f > best || (f == best && u < arg)) {
        best = f;
        arg = u;
      }
    }
    st.Bbar[static_cast<std::size_t>(v)] = bbar;
    st.B[static_cast<std::size_t>(v)] = best;
    st.b[static_cast<std::size_t>(v)] = arg;
  }
  return st;
}

std::vector<EdgeId> tree_reconstruct(const WeightedGraph& g, const TreeDpState& st, Vertex v) {
  (void)g;
  std::vector<EdgeId> out;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    const Vertex bx = st.b[static_cast<std::size_t>(x)];
    if (bx == -1) continue;
    out.push_back(st.parent_edge[static_cast<std::size_t>(bx)]);
    for (Vertex s : st.children(x)) {
      if (s != bx && st.B[static_cast<std::size_t>(s)] > 0) stack.push_back(s);
    }
    for (Vertex s : st.children(bx)) {
      if (st.B[static_cast<std::size_t>(s)] > 0) stack.push_back(s);
    }
  }
  return out;
}

Solution solve_tree(const WeightedGraph& g) {
  const TreeDpState st = tree_dp(g, 0);
  Solution sol;
  Vertex h = -1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (st.b[static_cast<std::size_t>(v)] == -1) continue;
    if (st.B[static_cast<std::size_t>(v)] > sol.optimum) {
      sol.optimum = st.B[static_cast<std::size_t>(v)];
      h = v;
    }
  }
  if (h != -1) sol.witness = Matching::from_edges(g, tree_reconstruct(g, st, h));
  return sol;
}

}  // namespace wcm
