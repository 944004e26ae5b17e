#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wcm/graph.hpp"

namespace wcm {

/// Largest ground set a Partition can carry (4-bit labels in one word).
constexpr int kMaxGround = 16;

/// Partition of a small sorted ground set. Element i carries the label of
/// its block, the position of the block's smallest element; labels are
/// packed 4 bits per position into `code`.
struct Partition {
  std::vector<Vertex> ground;
  std::uint64_t code = 0;

  static Partition from_blocks(std::vector<Vertex> ground, const std::vector<std::vector<Vertex>>& blocks);
  /// Arbitrary block ids per position; canonicalized.
  static Partition from_labels(std::vector<Vertex> ground, std::span<const int> labels);
  /// Every element in its own block.
  static Partition discrete(std::vector<Vertex> ground);

  int label(int pos) const { return static_cast<int>((code >> (4 * pos)) & 0xF); }
  int size() const { return static_cast<int>(ground.size()); }
  int num_blocks() const;
  std::vector<std::vector<Vertex>> blocks() const;

  bool operator==(const Partition&) const = default;
};

/// p ⊑ q: every block of q lies inside a block of p (p is coarser).
bool coarsen_le(const Partition& p, const Partition& q);
/// Finest partition coarser than both (⊔).
Partition join_partitions(const Partition& p, const Partition& q);
/// Coarsest common refinement (⊓).
Partition meet_partitions(const Partition& p, const Partition& q);
/// Restriction to X ⊆ ground (p↓X).
Partition down(const Partition& p, std::span<const Vertex> x);
/// Extension to Y ⊇ ground with new elements as singletons (p↑Y).
Partition up(const Partition& p, std::span<const Vertex> y);
/// U[X]: X is one block, other elements of U are singletons.
Partition singleton_block(std::span<const Vertex> u, std::span<const Vertex> x);

struct WeightedPartition {
  std::uint64_t code = 0;
  Weight weight = 0;
  /// Provenance handles used by the treewidth solver; carried through
  /// unary operators, combined by op_join.
  std::int32_t prov_a = -1;
  std::int32_t prov_b = -1;
  EdgeId edge = -1;
};

struct WeightedPartitionSet {
  std::vector<Vertex> ground;
  std::vector<WeightedPartition> entries;

  Partition partition(std::size_t i) const { return {ground, entries[i].code}; }
  bool empty() const { return entries.empty(); }
};

/// Keeps the maximum weight entry per distinct partition.
WeightedPartitionSet rmc(WeightedPartitionSet a);

/// Representative subset of at most 2^{|U|-1} entries (rank-based
/// elimination over the two-element field). Input is rmc-normalized.
WeightedPartitionSet reduce(WeightedPartitionSet a);

/// Largest weight among entries p with p ⊔ q a single block.
std::optional<Weight> opt(const Partition& q, const WeightedPartitionSet& a);

WeightedPartitionSet op_union(WeightedPartitionSet a, const WeightedPartitionSet& b);
WeightedPartitionSet op_insert(std::span<const Vertex> x, const WeightedPartitionSet& a);
WeightedPartitionSet op_shift(Weight w, WeightedPartitionSet a);
WeightedPartitionSet op_glue(std::span<const Vertex> x, const WeightedPartitionSet& a);
WeightedPartitionSet op_project(std::span<const Vertex> x, const WeightedPartitionSet& a);
WeightedPartitionSet op_join(const WeightedPartitionSet& a, const WeightedPartitionSet& b);

}  // namespace wcm
