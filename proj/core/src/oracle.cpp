#include "wcm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace wcm {

namespace {

class MwcmSearch {
 public:
  MwcmSearch(const WeightedGraph& g) : g_(g), used_(static_cast<std::size_t>(g.num_vertices()), 0),
                                       best_edge_(static_cast<std::size_t>(g.num_vertices()), 0),
                                       reach_(static_cast<std::size_t>(g.num_vertices()), 0) {
    order_.resize(static_cast<std::size_t>(g.num_edges()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](EdgeId a, EdgeId b) { return g.edge(a).w > g.edge(b).w; });
  }

  void run() { visit(0, 0); }

  Weight best = 0;
  std::vector<EdgeId> best_edges;
  std::uint64_t explored = 0;

 private:
  // Twice an upper bound on what edges order_[i..] can still add: each free
  // vertex contributes its heaviest positive usable edge.
  Weight doubled_bound(std::size_t i) {
    std::fill(best_edge_.begin(), best_edge_.end(), 0);
    for (std::size_t j = i; j < order_.size(); ++j) {
      const Edge& e = g_.edge(order_[j]);
      if (e.w <= 0) break;
      if (used_[static_cast<std::size_t>(e.u)] || used_[static_cast<std::size_t>(e.v)]) continue;
      auto& bu = best_edge_[static_cast<std::size_t>(e.u)];
      auto& bv = best_edge_[static_cast<std::size_t>(e.v)];
      bu = std::max(bu, e.w);
      bv = std::max(bv, e.w);
    }
    return std::accumulate(best_edge_.begin(), best_edge_.end(), Weight{0});
  }

  // False when the saturated vertices can no longer end up connected: any
  // connecting path must run through saturated vertices or free vertices
  // that some undecided edge could still saturate.
  bool can_connect(std::size_t i) {
    if (chosen_.size() < 2) return true;
    std::fill(reach_.begin(), reach_.end(), 0);
    for (std::size_t j = i; j < order_.size(); ++j) {
      const Edge& e = g_.edge(order_[j]);
      if (used_[static_cast<std::size_t>(e.u)] || used_[static_cast<std::size_t>(e.v)]) continue;
      reach_[static_cast<std::size_t>(e.u)] = reach_[static_cast<std::size_t>(e.v)] = 1;
    }
    for (std::size_t v = 0; v < used_.size(); ++v) reach_[v] |= used_[v];
    const Vertex start = g_.edge(chosen_[0]).u;
    stack_.assign(1, start);
    reach_[static_cast<std::size_t>(start)] = 2;
    while (!stack_.empty()) {
      const Vertex v = stack_.back();
      stack_.pop_back();
      for (EdgeId e : g_.incident(v)) {
        const Vertex o = g_.other(e, v);
        if (reach_[static_cast<std::size_t>(o)] == 1) {
          reach_[static_cast<std::size_t>(o)] = 2;
          stack_.push_back(o);
        }
      }
    }
    for (std::size_t v = 0; v < used_.size(); ++v) {
      if (used_[v] && reach_[v] != 2) return false;
    }
    return true;
  }

  bool current_connected() const {
    std::vector<Vertex> vs;
    vs.reserve(chosen_.size() * 2);
    for (EdgeId e : chosen_) {
      vs.push_back(g_.edge(e).u);
      vs.push_back(g_.edge(e).v);
    }
    return induces_connected(g_, vs);
  }

  void visit(std::size_t i, Weight cur) {
    ++explored;
    if (cur > best && current_connected()) {
      best = cur;
      best_edges = chosen_;
    }
    while (i < order_.size()) {
      const Edge& e = g_.edge(order_[i]);
      if (!used_[static_cast<std::size_t>(e.u)] && !used_[static_cast<std::size_t>(e.v)]) break;
      ++i;
    }
    if (i == order_.size()) return;
    if (cur + doubled_bound(i) / 2 <= best) return;
    if (!can_connect(i)) return;

    const EdgeId id = order_[i];
    const Edge& e = g_.edge(id);
    used_[static_cast<std::size_t>(e.u)] = used_[static_cast<std::size_t>(e.v)] = 1;
    chosen_.push_back(id);
    visit(i + 1, cur + e.w);
    chosen_.pop_back();
    used_[static_cast<std::size_t>(e.u)] = used_[static_cast<std::size_t>(e.v)] = 0;
    visit(i + 1, cur);
  }

  const WeightedGraph& g_;
  std::vector<char> used_;
  std::vector<Weight> best_edge_;
  std::vector<EdgeId> order_;
  std::vector<EdgeId> chosen_;
  std::vector<char> reach_;
  std::vector<Vertex> stack_;
};

}  // namespace

OracleResult brute_mwcm(const WeightedGraph& g, int edge_limit) {
  if (g.num_edges() > edge_limit) {
    throw Error("brute force refused: " + std::to_string(g.num_edges()) + " edges exceed limit " +
                std::to_string(edge_limit));
  }
  MwcmSearch search(g);
  search.run();
  OracleResult r;
  r.optimum = search.best;
  r.witness = Matching::from_edges(g, search.best_edges);
  r.explored = search.explored;
  return r;
}

OracleResult brute_wcs(const VertexWeightedGraph& g, int vertex_limit) {
  const int n = g.num_vertices();
  if (n > vertex_limit || n > 30) {
    throw Error("brute force refused: " + std::to_string(n) + " vertices exceed limit " +
                std::to_string(vertex_limit));
  }
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  OracleResult r;
  std::uint32_t best_set = 0;
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  for (std::uint32_t set = 1; set < limit; ++set) {
    ++r.explored;
    Weight total = 0;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      total += g.weight(std::countr_zero(rest));
    }
    if (total <= r.optimum) continue;
    std::uint32_t reach = set & (~set + 1);
    std::uint32_t frontier = reach;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= set & ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach != set) continue;
    r.optimum = total;
    best_set = set;
  }
  for (int v = 0; v < n; ++v) {
    if (best_set >> v & 1u) r.vertices.push_back(v);
  }
  return r;
}

namespace {

void pair_up(const WeightedGraph& g, std::vector<char>& used, std::vector<EdgeId>& chosen, Weight cur,
             bool& found, Weight& best, std::vector<EdgeId>& best_edges, std::uint64_t& explored) {
  ++explored;
  Vertex v = 0;
  while (v < g.num_vertices() && used[static_cast<std::size_t>(v)]) ++v;
  if (v == g.num_vertices()) {
    if (!found || cur > best) {
      found = true;
      best = cur;
      best_edges = chosen;
    }
    return;
  }
  used[static_cast<std::size_t>(v)] = 1;
  for (EdgeId e : g.incident(v)) {
    const Vertex u = g.other(e, v);
    if (used[static_cast<std::size_t>(u)]) continue;
    used[static_cast<std::size_t>(u)] = 1;
    chosen.push_back(e);
    pair_up(g, used, chosen, cur + g.edge(e).w, found, best, best_edges, explored);
    chosen.pop_back();
    used[static_cast<std::size_t>(u)] = 0;
  }
  used[static_cast<std::size_t>(v)] = 0;
}

}  // namespace

OracleResult brute_mwpm(const WeightedGraph& g) {
  const int n = g.num_vertices();
  if (n % 2 != 0) throw Error("no perfect matching: odd vertex count");
  if (n > 12) throw Error("brute force refused: perfect matching oracle limited to 12 vertices");
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> chosen;
  std::vector<EdgeId> best_edges;
  bool found = false;
  OracleResult r;
  pair_up(g, used, chosen, 0, found, r.optimum, best_edges, r.explored);
  if (!found) throw Error("no perfect matching");
  r.witness = Matching::from_edges(g, best_edges);
  return r;
}

}  // namespace wcm
