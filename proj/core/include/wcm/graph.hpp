#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wcm {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::int64_t;

/// Thrown on malformed input, violated preconditions and failed checks.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex u;
  Vertex v;
  Weight w;
};

/// Undirected simple graph with signed integer edge weights. Vertices are
/// dense 0-based ids; edges are addressed by insertion index.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);

  /// Rejects self-loops, parallel edges and out-of-range endpoints.
  EdgeId add_edge(Vertex u, Vertex v, Weight w);
  Vertex add_vertex();

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const;

  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < num_vertices(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adj_;
};

/// A set of vertex-disjoint edges of one graph, with cached weight and
/// saturated-vertex set. Edge ids are kept sorted.
class Matching {
 public:
  Matching() = default;

  /// Validates range and disjointness; throws Error otherwise.
  static Matching from_edges(const WeightedGraph& g, std::vector<EdgeId> edges);

  std::span<const EdgeId> edges() const { return edges_; }
  Weight weight() const { return weight_; }
  /// Sorted list of saturated vertices, V(M).
  std::span<const Vertex> saturated() const { return saturated_; }
  bool saturates(Vertex v) const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  /// Recomputes the weight from the graph; used by consistency checks.
  Weight recompute_weight(const WeightedGraph& g) const;

 private:
  std::vector<EdgeId> edges_;
  std::vector<Vertex> saturated_;
  Weight weight_ = 0;
};

/// Unweighted simple graph carrying one weight per vertex.
class VertexWeightedGraph {
 public:
  VertexWeightedGraph() = default;
  explicit VertexWeightedGraph(std::vector<Weight> weights);

  void add_edge(Vertex u, Vertex v);
  Vertex add_vertex(Weight w);

  int num_vertices() const { return static_cast<int>(weights_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  Weight weight(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
  std::span<const Weight> weights() const { return weights_; }
  std::span<const std::pair<Vertex, Vertex>> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const;

 private:
  std::vector<Weight> weights_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Optimum value with a matching attaining it.
struct Solution {
  Weight optimum = 0;
  Matching witness;
};

struct GraphClassReport {
  bool connected = false;
  bool is_tree = false;
  int max_degree = 0;
  bool is_path = false;
  bool is_cycle = false;
  /// side[v] in {0,1} when the graph is bipartite.
  std::optional<std::vector<int>> bipartition;
  /// Perfect elimination ordering when the graph is chordal.
  std::optional<std::vector<Vertex>> chordal_peo;
  bool all_weights_nonnegative = true;

  bool bipartite() const { return bipartition.has_value(); }
  bool chordal() const { return chordal_peo.has_value(); }
};

bool is_connected(const WeightedGraph& g);

/// True iff G[V(m)] is connected; the empty matching counts as connected.
bool induced_by_matching_connected(const WeightedGraph& g, const Matching& m);

/// Same check for an explicit vertex set (duplicates ignored).
bool induces_connected(const WeightedGraph& g, std::span<const Vertex> vertices);
bool induces_connected(const VertexWeightedGraph& g, std::span<const Vertex> vertices);

GraphClassReport classify(const WeightedGraph& g);

/// Maximum-cardinality search order followed by the elimination check.
std::optional<std::vector<Vertex>> perfect_elimination_order(const WeightedGraph& g);
bool is_perfect_elimination_order(const WeightedGraph& g, std::span<const Vertex> order);

std::vector<Vertex> articulation_points(const WeightedGraph& g);

/// Unweighted eccentricity maximum; throws on disconnected input.
int diameter(const WeightedGraph& g);

/// Vertex sets of the connected components, each sorted.
std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g);

/// Subgraph induced by `vertices`; `old_to_new` maps back (-1 if absent).
struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<Vertex> new_to_old;
  std::vector<EdgeId> edge_new_to_old;
};
InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices);

}  // namespace wcm
