#include "wcm/treewidth_solver.hpp"

#include <algorithm>
#include <string>

namespace wcm {

namespace {

constexpr int kMaxBag = 12;

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

int pow3(int k) {
  int r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

std::uint32_t drop_bit(std::uint32_t m, int p) {
  const std::uint32_t low = m & ((1u << p) - 1);
  return low | ((m >> (p + 1)) << p);
}

std::uint32_t insert_zero_bit(std::uint32_t m, int p) {
  const std::uint32_t low = m & ((1u << p) - 1);
  return low | ((m >> p) << (p + 1));
}

struct Record {
  std::int32_t a;
  std::int32_t b;
  EdgeId edge;
};

using Table = std::vector<WeightedPartitionSet>;

class RootedDp {
 public:
  RootedDp(const WeightedGraph& g, const NiceTreeDecomposition& nice, const std::vector<char>& forbidden,
           const TreewidthOptions& options, TreewidthStats* stats)
      : g_(g), nice_(nice), forbidden_(forbidden), options_(options), stats_(stats) {}

  /// Best weight with pi saturated, or nullopt.
  std::optional<Weight> run(std::vector<EdgeId>* witness) {
    const int count = static_cast<int>(nice_.nodes.size());
    tables_.assign(idx(count), {});
    const int r_prime = nice_.nodes[idx(nice_.root)].children[0];
    for (int i = 0; i <= r_prime; ++i) compute(i);
    const Table& top = tables_[idx(r_prime)];
    // Bag of r' is {pi}; cell 1 is S = {pi}, U = {}.
    const WeightedPartitionSet& cell = top[1];
    if (cell.empty()) return std::nullopt;
    const WeightedPartition* best = &cell.entries[0];
    for (const auto& e : cell.entries) {
      if (e.weight > best->weight) best = &e;
    }
    if (witness) rebuild(best->prov_a, *witness);
    return best->weight;
  }

 private:
  void compute(int i) {
    const NiceNode& x = nice_.nodes[idx(i)];
    const int k = static_cast<int>(x.bag.size());
    if (k > kMaxBag) {
      throw Error("treewidth solver supports bags of at most " + std::to_string(kMaxBag) + " vertices");
    }
    const int cells = pow3(k);
    Table table(idx(cells));
    std::vector<std::uint32_t> adj(idx(k), 0);
    for (int p = 0; p < k; ++p) {
      for (int q = 0; q < k; ++q) {
        if (p != q && g_.find_edge(x.bag[idx(p)], x.bag[idx(q)])) adj[idx(p)] |= 1u << q;
      }
    }
    for (int c = 0; c < cells; ++c) {
      std::uint32_t s = 0;
      std::uint32_t u = 0;
      for (int p = 0, rest = c; p < k; ++p, rest /= 3) {
        if (rest % 3 == 1) s |= 1u << p;
        if (rest % 3 == 2) u |= 1u << p;
      }
      WeightedPartitionSet cell;
      for (int p = 0; p < k; ++p) {
        if (((s | u) >> p) & 1u) cell.ground.push_back(x.bag[idx(p)]);
      }
      switch (x.kind) {
        case NiceKind::Leaf:
          cell.entries.push_back({});
          break;
        case NiceKind::Introduce:
          introduce(x, s, u, adj, cell);
          break;
        case NiceKind::Forget:
          forget(x, s, u, cell);
          break;
        case NiceKind::Join:
          join(x, s, u, cell);
          break;
      }
      finish(i, c, cell);
      table[idx(c)] = std::move(cell);
    }
    for (int child : x.children) Table().swap(tables_[idx(child)]);
    tables_[idx(i)] = std::move(table);
  }

  void introduce(const NiceNode& x, std::uint32_t s, std::uint32_t u, const std::vector<std::uint32_t>& adj,
                 WeightedPartitionSet& cell) {
    const Vertex v = x.vertex;
    const int pv = static_cast<int>(std::lower_bound(x.bag.begin(), x.bag.end(), v) - x.bag.begin());
    const Table& child = tables_[idx(x.children[0])];
    const int kc = static_cast<int>(x.bag.size()) - 1;
    const std::uint32_t bit = 1u << pv;
    if (!((s | u) & bit)) {
      cell.entries = child[idx(cell_index(drop_bit(s, pv), drop_bit(u, pv), kc))].entries;
      return;
    }
    if (forbidden_[idx(v)]) return;
    const Vertex single[1] = {v};
    const std::uint32_t saturated_nbrs = adj[idx(pv)] & (s | u);
    if (u & bit) {
      const auto& from = child[idx(cell_index(drop_bit(s, pv), drop_bit(u & ~bit, pv), kc))];
      if (from.empty()) return;
      std::vector<Vertex> block{v};
      for (int p = 0; p < static_cast<int>(x.bag.size()); ++p) {
        if ((saturated_nbrs >> p) & 1u) block.push_back(x.bag[idx(p)]);
      }
      cell.entries = op_glue(block, op_insert(single, from)).entries;
      return;
    }
    // v is matched to a neighbour p that was waiting half-matched below.
    for (int p = 0; p < static_cast<int>(x.bag.size()); ++p) {
      if (!(((adj[idx(pv)] & s) >> p) & 1u)) continue;
      const std::uint32_t pb = 1u << p;
      const auto& from = child[idx(cell_index(drop_bit(s & ~bit & ~pb, pv), drop_bit(u | pb, pv), kc))];
      if (from.empty()) continue;
      std::vector<Vertex> block{v};
      for (int q = 0; q < static_cast<int>(x.bag.size()); ++q) {
        if ((saturated_nbrs >> q) & 1u) block.push_back(x.bag[idx(q)]);
      }
      const EdgeId e = *g_.find_edge(v, x.bag[idx(p)]);
      WeightedPartitionSet part = op_shift(g_.edge(e).w, op_glue(block, op_insert(single, from)));
      for (auto& entry : part.entries) entry.edge = e;
      cell.entries.insert(cell.entries.end(), part.entries.begin(), part.entries.end());
    }
  }

  void forget(const NiceNode& x, std::uint32_t s, std::uint32_t u, WeightedPartitionSet& cell) {
    const Vertex v = x.vertex;
    const NiceNode& y = nice_.nodes[idx(x.children[0])];
    const Table& child = tables_[idx(x.children[0])];
    const int pv = static_cast<int>(std::lower_bound(y.bag.begin(), y.bag.end(), v) - y.bag.begin());
    const int kc = static_cast<int>(y.bag.size());
    const std::uint32_t cs = insert_zero_bit(s, pv);
    const std::uint32_t cu = insert_zero_bit(u, pv);
    cell.entries = child[idx(cell_index(cs, cu, kc))].entries;
    const auto& matched = child[idx(cell_index(cs | (1u << pv), cu, kc))];
    if (!matched.empty()) {
      const Vertex single[1] = {v};
      const auto projected = op_project(single, matched);
      cell.entries.insert(cell.entries.end(), projected.entries.begin(), projected.entries.end());
    }
  }

  void join(const NiceNode& x, std::uint32_t s, std::uint32_t u, WeightedPartitionSet& cell) {
    const Table& left = tables_[idx(x.children[0])];
    const Table& right = tables_[idx(x.children[1])];
    const int k = static_cast<int>(x.bag.size());
    for (std::uint32_t y = s;; y = (y - 1) & s) {
      const auto& a = left[idx(cell_index(y, u | (s & ~y), k))];
      const auto& b = right[idx(cell_index(s & ~y, u | y, k))];
      if (!a.empty() && !b.empty()) {
        const auto joined = op_join(a, b);
        cell.entries.insert(cell.entries.end(), joined.entries.begin(), joined.entries.end());
      }
      if (y == 0) break;
    }
  }

  void finish(int node, int c, WeightedPartitionSet& cell) {
    if (stats_) {
      ++stats_->cells;
      stats_->entries_before_reduce += cell.entries.size();
    }
    if (cell.entries.empty()) return;
    cell = rmc(std::move(cell));
    if (options_.use_reduce) cell = reduce(std::move(cell));
    const std::size_t bound = cell.ground.empty() ? 1 : std::size_t{1} << (cell.ground.size() - 1);
    if (options_.use_reduce && options_.check_size_bound && cell.entries.size() > bound) {
      throw Error("reduce left " + std::to_string(cell.entries.size()) + " entries over a ground set of size " +
                  std::to_string(cell.ground.size()));
    }
    Weight best = cell.entries[0].weight;
    for (auto& e : cell.entries) {
      best = std::max(best, e.weight);
      if (e.prov_b != -1 || e.edge != -1) {
        arena_.push_back({e.prov_a, e.prov_b, e.edge});
        e.prov_a = static_cast<std::int32_t>(arena_.size()) - 1;
        e.prov_b = -1;
        e.edge = -1;
      }
    }
    if (stats_) {
      stats_->entries_after_reduce += cell.entries.size();
      stats_->max_cell_entries = std::max(stats_->max_cell_entries, cell.entries.size());
    }
    if (options_.observer) options_.observer(nice_.pi, node, c, best);
  }

  void rebuild(std::int32_t root, std::vector<EdgeId>& out) const {
    std::vector<std::int32_t> stack;
    if (root != -1) stack.push_back(root);
    while (!stack.empty()) {
      const Record& r = arena_[idx(stack.back())];
      stack.pop_back();
      if (r.edge != -1) out.push_back(r.edge);
      if (r.a != -1) stack.push_back(r.a);
      if (r.b != -1) stack.push_back(r.b);
    }
  }

  const WeightedGraph& g_;
  const NiceTreeDecomposition& nice_;
  const std::vector<char>& forbidden_;
  const TreewidthOptions& options_;
  TreewidthStats* stats_;
  std::vector<Table> tables_;
  std::vector<Record> arena_;
};

}  // namespace

int cell_index(std::uint32_t s_mask, std::uint32_t u_mask, int bag_size) {
  int c = 0;
  int w = 1;
  for (int p = 0; p < bag_size; ++p, w *= 3) {
    if ((s_mask >> p) & 1u) c += w;
    if ((u_mask >> p) & 1u) c += 2 * w;
  }
  return c;
}

Solution solve_treewidth(const WeightedGraph& g, const TreeDecomposition& td, const TreewidthOptions& options,
                         TreewidthStats* stats) {
  validate_td(g, td);
  const int n = g.num_vertices();
  std::vector<char> forbidden(idx(n), 0);
  Solution sol;
  std::vector<EdgeId> best_edges;
  for (Vertex pi = 0; pi < n; ++pi) {
    if (g.degree(pi) > 0) {
      const NiceTreeDecomposition nice = make_nice(td, pi);
      RootedDp dp(g, nice, forbidden, options, stats);
      std::vector<EdgeId> edges;
      const auto cand = dp.run(&edges);
      if (stats) ++stats->roots;
      if (cand && *cand > sol.optimum) {
        sol.optimum = *cand;
        best_edges = std::move(edges);
      }
    }
    if (options.skip_earlier_roots) forbidden[idx(pi)] = 1;
  }
  sol.witness = Matching::from_edges(g, std::move(best_edges));
  if (sol.witness.weight() != sol.optimum) throw Error("treewidth witness weight mismatch");
  return sol;
}

Solution solve_treewidth(const WeightedGraph& g, const TreewidthOptions& options, TreewidthStats* stats) {
  return solve_treewidth(g, heuristic_td(g, EliminationHeuristic::MinFill), options, stats);
}

}  // namespace wcm
