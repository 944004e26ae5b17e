#pragma once

#include <functional>
#include <optional>

#include "wcm/graph.hpp"
#include "wcm/partition.hpp"
#include "wcm/tree_decomposition.hpp"

namespace wcm {

/// Called once per (pi, nice node, table cell) with the cell's best weight,
/// for cells holding at least one entry. Cells are numbered in base 3 over
/// bag positions: digit 1 = matched (S), digit 2 = half-matched (U).
using CellObserver = std::function<void(Vertex pi, int node, int cell, Weight best)>;

struct TreewidthOptions {
  bool use_reduce = true;
  /// Throw if a reduced cell exceeds 2^{|S∪U|-1} entries.
  bool check_size_bound = false;
  /// Roots are processed in id order; when set, the DP for root pi only
  /// admits solutions avoiding every earlier root.
  bool skip_earlier_roots = true;
  CellObserver observer;
};

struct TreewidthStats {
  std::uint64_t cells = 0;
  std::uint64_t entries_before_reduce = 0;
  std::uint64_t entries_after_reduce = 0;
  std::size_t max_cell_entries = 0;
  int roots = 0;
};

/// Cell index of the disjoint pair (S, U) given as bitmasks over bag positions.
int cell_index(std::uint32_t s_mask, std::uint32_t u_mask, int bag_size);

Solution solve_treewidth(const WeightedGraph& g, const TreeDecomposition& td, const TreewidthOptions& options = {},
                         TreewidthStats* stats = nullptr);

/// Uses a min-fill decomposition.
Solution solve_treewidth(const WeightedGraph& g, const TreewidthOptions& options = {},
                         TreewidthStats* stats = nullptr);

}  // namespace wcm
