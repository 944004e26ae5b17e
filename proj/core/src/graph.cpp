#include "wcm/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace wcm {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

WeightedGraph::WeightedGraph(int n) {
  if (n < 0) throw Error("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Vertex WeightedGraph::add_vertex() {
  adj_.emplace_back();
  return num_vertices() - 1;
}

EdgeId WeightedGraph::add_edge(Vertex u, Vertex v, Weight w) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw Error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  if (find_edge(u, v)) {
    throw Error("parallel edge " + std::to_string(u) + " " + std::to_string(v));
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, w});
  adj_[idx(u)].push_back(id);
  adj_[idx(v)].push_back(id);
  return id;
}

int WeightedGraph::max_degree() const {
  int best = 0;
  for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

std::optional<EdgeId> WeightedGraph::find_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  const Vertex scan = degree(u) <= degree(v) ? u : v;
  const Vertex target = scan == u ? v : u;
  for (EdgeId e : adj_[idx(scan)]) {
    if (other(e, scan) == target) return e;
  }
  return std::nullopt;
}

Matching Matching::from_edges(const WeightedGraph& g, std::vector<EdgeId> edges) {
  Matching m;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  m.saturated_.reserve(edges.size() * 2);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) {
      throw Error("matching edge index out of range: " + std::to_string(e));
    }
    const Edge& ed = g.edge(e);
    m.saturated_.push_back(ed.u);
    m.saturated_.push_back(ed.v);
    m.weight_ += ed.w;
  }
  std::sort(m.saturated_.begin(), m.saturated_.end());
  const auto dup = std::adjacent_find(m.saturated_.begin(), m.saturated_.end());
  if (dup != m.saturated_.end()) {
    throw Error("matching edges share endpoint " + std::to_string(*dup));
  }
  m.edges_ = std::move(edges);
  return m;
}

bool Matching::saturates(Vertex v) const {
  return std::binary_search(saturated_.begin(), saturated_.end(), v);
}

Weight Matching::recompute_weight(const WeightedGraph& g) const {
  Weight total = 0;
  for (EdgeId e : edges_) total += g.edge(e).w;
  return total;
}

VertexWeightedGraph::VertexWeightedGraph(std::vector<Weight> weights)
    : weights_(std::move(weights)), adj_(weights_.size()) {}

Vertex VertexWeightedGraph::add_vertex(Weight w) {
  weights_.push_back(w);
  adj_.emplace_back();
  return num_vertices() - 1;
}

bool VertexWeightedGraph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[idx(u)];
  return std::find(a.begin(), a.end(), v) != a.end();
}

void VertexWeightedGraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw Error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) throw Error("parallel edge " + std::to_string(u) + " " + std::to_string(v));
  edges_.emplace_back(u, v);
  adj_[idx(u)].push_back(v);
  adj_[idx(v)].push_back(u);
}

bool is_connected(const WeightedGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(idx(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      const Vertex u = g.other(e, v);
      if (!seen[idx(u)]) {
        seen[idx(u)] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

namespace {

template <typename NeighborFn>
bool members_connected(int n, std::span<const Vertex> vertices, NeighborFn&& for_each_neighbor) {
  if (vertices.empty()) return true;
  std::vector<char> member(idx(n), 0);
  int total = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= n) throw Error("vertex out of range: " + std::to_string(v));
    if (!member[idx(v)]) {
      member[idx(v)] = 1;
      ++total;
    }
  }
  std::vector<Vertex> stack{vertices.front()};
  member[idx(vertices.front())] = 2;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for_each_neighbor(v, [&](Vertex u) {
      if (member[idx(u)] == 1) {
        member[idx(u)] = 2;
        ++reached;
        stack.push_back(u);
      }
    });
  }
  return reached == total;
}

}  // namespace

bool induces_connected(const WeightedGraph& g, std::span<const Vertex> vertices) {
  return members_connected(g.num_vertices(), vertices, [&](Vertex v, auto&& visit) {
    for (EdgeId e : g.incident(v)) visit(g.other(e, v));
  });
}

bool induces_connected(const VertexWeightedGraph& g, std::span<const Vertex> vertices) {
  return members_connected(g.num_vertices(), vertices, [&](Vertex v, auto&& visit) {
    for (Vertex u : g.neighbors(v)) visit(u);
  });
}

bool induced_by_matching_connected(const WeightedGraph& g, const Matching& m) {
  for (EdgeId e : m.edges()) {
    if (e < 0 || e >= g.num_edges()) throw Error("matching edge index out of range");
  }
  return induces_connected(g, m.saturated());
}

std::optional<std::vector<Vertex>> perfect_elimination_order(const WeightedGraph& g) {
  const int n = g.num_vertices();
  // Maximum cardinality search with lazily cleaned buckets; the reverse of
  // the visit order is a PEO exactly when the graph is chordal.
  std::vector<int> label(idx(n), 0);
  std::vector<char> numbered(idx(n), 0);
  std::vector<std::vector<Vertex>> buckets(idx(n) + 1);
  for (Vertex v = n - 1; v >= 0; --v) buckets[0].push_back(v);
  std::vector<Vertex> visit;
  visit.reserve(idx(n));
  int top = 0;
  while (static_cast<int>(visit.size()) < n) {
    while (top > 0 && buckets[idx(top)].empty()) --top;
    auto& bucket = buckets[idx(top)];
    const Vertex v = bucket.back();
    bucket.pop_back();
    if (numbered[idx(v)] || label[idx(v)] != top) continue;
    numbered[idx(v)] = 1;
    visit.push_back(v);
    for (EdgeId e : g.incident(v)) {
      const Vertex u = g.other(e, v);
      if (numbered[idx(u)]) continue;
      const int l = ++label[idx(u)];
      buckets[idx(l)].push_back(u);
      top = std::max(top, l);
    }
  }
  std::reverse(visit.begin(), visit.end());
  if (!is_perfect_elimination_order(g, visit)) return std::nullopt;
  return visit;
}

bool is_perfect_elimination_order(const WeightedGraph& g, std::span<const Vertex> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(idx(n), -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[idx(i)];
    if (v < 0 || v >= n || pos[idx(v)] != -1) return false;
    pos[idx(v)] = i;
  }
  std::vector<int> stamp(idx(n), -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[idx(i)];
    // Later neighbours of v must all be adjacent to the earliest of them.
    Vertex parent = -1;
    for (EdgeId e : g.incident(v)) {
      const Vertex u = g.other(e, v);
      if (pos[idx(u)] > i && (parent == -1 || pos[idx(u)] < pos[idx(parent)])) parent = u;
    }
    if (parent == -1) continue;
    for (EdgeId e : g.incident(parent)) stamp[idx(g.other(e, parent))] = i;
    for (EdgeId e : g.incident(v)) {
      const Vertex u = g.other(e, v);
      if (u != parent && pos[idx(u)] > i && stamp[idx(u)] != i) return false;
    }
  }
  return true;
}

GraphClassReport classify(const WeightedGraph& g) {
  GraphClassReport r;
  const int n = g.num_vertices();
  const int m = g.num_edges();
  r.connected = is_connected(g);
  r.max_degree = g.max_degree();
  r.is_tree = r.connected && n >= 1 && m == n - 1;
  r.is_path = r.is_tree && r.max_degree <= 2;
  r.is_cycle = r.connected && n >= 3 && m == n;
  if (r.is_cycle) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) != 2) {
        r.is_cycle = false;
        break;
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (e.w < 0) {
      r.all_weights_nonnegative = false;
      break;
    }
  }

  std::vector<int> side(idx(n), -1);
  bool bipartite = true;
  for (Vertex s = 0; s < n && bipartite; ++s) {
    if (side[idx(s)] != -1) continue;
    side[idx(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty() && bipartite) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(v)) {
        const Vertex u = g.other(e, v);
        if (side[idx(u)] == -1) {
          side[idx(u)] = 1 - side[idx(v)];
          queue.push_back(u);
        } else if (side[idx(u)] == side[idx(v)]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  if (bipartite) r.bipartition = std::move(side);
  r.chordal_peo = perfect_elimination_order(g);
  return r;
}

std::vector<Vertex> articulation_points(const WeightedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(idx(n), -1);
  std::vector<int> low(idx(n), 0);
  std::vector<char> is_cut(idx(n), 0);
  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next;
    int children;
  };
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[idx(root)] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[idx(root)] = low[idx(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.parent_edge) continue;
        const Vertex u = g.other(e, f.v);
        if (disc[idx(u)] == -1) {
          disc[idx(u)] = low[idx(u)] = timer++;
          ++f.children;
          stack.push_back({u, e, 0, 0});
        } else {
          low[idx(f.v)] = std::min(low[idx(f.v)], disc[idx(u)]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) is_cut[idx(done.v)] = 1;
        continue;
      }
      Frame& parent = stack.back();
      low[idx(parent.v)] = std::min(low[idx(parent.v)], low[idx(done.v)]);
      if (stack.size() >= 2 && low[idx(done.v)] >= disc[idx(parent.v)]) is_cut[idx(parent.v)] = 1;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[idx(v)]) out.push_back(v);
  }
  return out;
}

int diameter(const WeightedGraph& g) {
  const int n = g.num_vertices();
  if (!is_connected(g)) throw Error("diameter of a disconnected graph is undefined");
  int best = 0;
  std::vector<int> dist(idx(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[idx(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      best = std::max(best, dist[idx(v)]);
      for (EdgeId e : g.incident(v)) {
        const Vertex u = g.other(e, v);
        if (dist[idx(u)] == -1) {
          dist[idx(u)] = dist[idx(v)] + 1;
          queue.push_back(u);
        }
      }
    }
  }
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(idx(n), 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[idx(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[idx(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Vertex v = comp[i];
      for (EdgeId e : g.incident(v)) {
        const Vertex u = g.other(e, v);
        if (!seen[idx(u)]) {
          seen[idx(u)] = 1;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  std::vector<Vertex> old_to_new(idx(g.num_vertices()), -1);
  out.graph = WeightedGraph(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (!g.has_vertex(v)) throw Error("vertex out of range: " + std::to_string(v));
    if (old_to_new[idx(v)] != -1) throw Error("duplicate vertex in induced subgraph");
    old_to_new[idx(v)] = static_cast<Vertex>(i);
    out.new_to_old.push_back(v);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const Vertex a = old_to_new[idx(ed.u)];
    const Vertex b = old_to_new[idx(ed.v)];
    if (a != -1 && b != -1) {
      out.graph.add_edge(a, b, ed.w);
      out.edge_new_to_old.push_back(e);
    }
  }
  return out;
}

}  // namespace wcm
