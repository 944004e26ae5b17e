#include "wcm/partition.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace wcm {

namespace {

using Labels = std::array<int, kMaxGround>;

void check_ground(const std::vector<Vertex>& ground) {
  if (static_cast<int>(ground.size()) > kMaxGround) {
    throw Error("partition ground set larger than " + std::to_string(kMaxGround));
  }
  for (std::size_t i = 1; i < ground.size(); ++i) {
    if (ground[i - 1] >= ground[i]) throw Error("partition ground set must be sorted and distinct");
  }
}

std::uint64_t canonical(const Labels& ids, int k) {
  std::array<int, kMaxGround> first_id{};
  std::array<int, kMaxGround> first_pos{};
  int seen = 0;
  std::uint64_t code = 0;
  for (int i = 0; i < k; ++i) {
    int label = -1;
    for (int j = 0; j < seen; ++j) {
      if (first_id[static_cast<std::size_t>(j)] == ids[static_cast<std::size_t>(i)]) {
        label = first_pos[static_cast<std::size_t>(j)];
        break;
      }
    }
    if (label == -1) {
      first_id[static_cast<std::size_t>(seen)] = ids[static_cast<std::size_t>(i)];
      first_pos[static_cast<std::size_t>(seen)] = i;
      ++seen;
      label = i;
    }
    code |= static_cast<std::uint64_t>(label) << (4 * i);
  }
  return code;
}

Labels unpack(std::uint64_t code, int k) {
  Labels l{};
  for (int i = 0; i < k; ++i) l[static_cast<std::size_t>(i)] = static_cast<int>((code >> (4 * i)) & 0xF);
  return l;
}

int find_root(Labels& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

void unite(Labels& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
}

/// Sorted union of two sorted ground sets and, for each input, the position
/// of its elements in the union.
struct Merge {
  std::vector<Vertex> ground;
  std::vector<int> pos_a;
  std::vector<int> pos_b;
};

Merge merge_grounds(std::span<const Vertex> a, std::span<const Vertex> b) {
  Merge m;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m.ground));
  check_ground(m.ground);
  for (Vertex v : a) {
    m.pos_a.push_back(static_cast<int>(std::lower_bound(m.ground.begin(), m.ground.end(), v) - m.ground.begin()));
  }
  for (Vertex v : b) {
    m.pos_b.push_back(static_cast<int>(std::lower_bound(m.ground.begin(), m.ground.end(), v) - m.ground.begin()));
  }
  return m;
}

std::vector<Vertex> sorted_unique(std::span<const Vertex> x) {
  std::vector<Vertex> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// Re-expresses a partition of `from` on the superset ground `m.ground`,
/// new elements as singletons; returns union-find parents.
Labels lifted(std::uint64_t code, int k_from, const std::vector<int>& pos, int k_to) {
  Labels parent{};
  for (int i = 0; i < k_to; ++i) parent[static_cast<std::size_t>(i)] = i;
  const Labels l = unpack(code, k_from);
  for (int i = 0; i < k_from; ++i) {
    unite(parent, pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(l[static_cast<std::size_t>(i)])]);
  }
  return parent;
}

std::uint64_t close(Labels& parent, int k) {
  Labels ids{};
  for (int i = 0; i < k; ++i) ids[static_cast<std::size_t>(i)] = find_root(parent, i);
  return canonical(ids, k);
}

bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> sup) {
  return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

}  // namespace

Partition Partition::from_labels(std::vector<Vertex> ground, std::span<const int> labels) {
  check_ground(ground);
  if (labels.size() != ground.size()) throw Error("partition label count does not match ground set");
  Labels ids{};
  std::copy(labels.begin(), labels.end(), ids.begin());
  const int k = static_cast<int>(ground.size());
  return {std::move(ground), canonical(ids, k)};
}

Partition Partition::from_blocks(std::vector<Vertex> ground, const std::vector<std::vector<Vertex>>& blocks) {
  std::sort(ground.begin(), ground.end());
  check_ground(ground);
  std::vector<int> labels(ground.size(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error("partition block is empty");
    for (Vertex v : blocks[b]) {
      const auto it = std::lower_bound(ground.begin(), ground.end(), v);
      if (it == ground.end() || *it != v) throw Error("partition block element outside ground set");
      auto& slot = labels[static_cast<std::size_t>(it - ground.begin())];
      if (slot != -1) throw Error("partition blocks overlap");
      slot = static_cast<int>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) throw Error("partition blocks do not cover ground set");
  return from_labels(std::move(ground), labels);
}

Partition Partition::discrete(std::vector<Vertex> ground) {
  std::vector<int> labels(ground.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
  return from_labels(std::move(ground), labels);
}

int Partition::num_blocks() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) count += label(i) == i ? 1 : 0;
  return count;
}

std::vector<std::vector<Vertex>> Partition::blocks() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<int> block_of(ground.size(), -1);
  for (int i = 0; i < size(); ++i) {
    const int l = label(i);
    if (l == i) {
      block_of[static_cast<std::size_t>(i)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(block_of[static_cast<std::size_t>(l)])].push_back(ground[static_cast<std::size_t>(i)]);
  }
  return out;
}

bool coarsen_le(const Partition& p, const Partition& q) {
  if (p.ground != q.ground) throw Error("partition ground sets differ");
  // Elements sharing a block of q must share a block of p.
  for (int i = 0; i < q.size(); ++i) {
    if (p.label(i) != p.label(q.label(i))) return false;
  }
  return true;
}

Partition join_partitions(const Partition& p, const Partition& q) {
  if (p.ground != q.ground) throw Error("partition ground sets differ");
  const int k = p.size();
  Labels parent{};
  for (int i = 0; i < k; ++i) parent[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < k; ++i) {
    unite(parent, i, p.label(i));
    unite(parent, i, q.label(i));
  }
  return {p.ground, close(parent, k)};
}

Partition meet_partitions(const Partition& p, const Partition& q) {
  if (p.ground != q.ground) throw Error("partition ground sets differ");
  const int k = p.size();
  Labels ids{};
  for (int i = 0; i < k; ++i) ids[static_cast<std::size_t>(i)] = p.label(i) * kMaxGround + q.label(i);
  return {p.ground, canonical(ids, k)};
}

Partition down(const Partition& p, std::span<const Vertex> x) {
  const std::vector<Vertex> keep = sorted_unique(x);
  if (!is_subset(keep, p.ground)) throw Error("restriction set is not inside the ground set");
  Labels ids{};
  int k = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (std::binary_search(keep.begin(), keep.end(), p.ground[static_cast<std::size_t>(i)])) {
      ids[static_cast<std::size_t>(k++)] = p.label(i);
    }
  }
  return {keep, canonical(ids, k)};
}

Partition up(const Partition& p, std::span<const Vertex> y) {
  const std::vector<Vertex> target = sorted_unique(y);
  if (!is_subset(p.ground, target)) throw Error("extension set does not contain the ground set");
  const Merge m = merge_grounds(p.ground, target);
  Labels parent = lifted(p.code, p.size(), m.pos_a, static_cast<int>(m.ground.size()));
  return {m.ground, close(parent, static_cast<int>(m.ground.size()))};
}

Partition singleton_block(std::span<const Vertex> u, std::span<const Vertex> x) {
  std::vector<Vertex> ground = sorted_unique(u);
  const std::vector<Vertex> block = sorted_unique(x);
  if (!is_subset(block, ground)) throw Error("block is not inside the ground set");
  std::vector<int> labels(ground.size());
  for (std::size_t i = 0; i < ground.size(); ++i) {
    labels[i] = std::binary_search(block.begin(), block.end(), ground[i]) ? -1 : static_cast<int>(i);
  }
  return Partition::from_labels(std::move(ground), labels);
}

WeightedPartitionSet rmc(WeightedPartitionSet a) {
  std::stable_sort(a.entries.begin(), a.entries.end(), [](const WeightedPartition& x, const WeightedPartition& y) {
    if (x.code != y.code) return x.code < y.code;
    return x.weight > y.weight;
  });
  auto last = std::unique(a.entries.begin(), a.entries.end(),
                          [](const WeightedPartition& x, const WeightedPartition& y) { return x.code == y.code; });
  a.entries.erase(last, a.entries.end());
  return a;
}

WeightedPartitionSet reduce(WeightedPartitionSet a) {
  const int k = static_cast<int>(a.ground.size());
  if (k <= 1 || a.entries.size() <= 1) return a;
  const std::uint32_t cuts = 1u << (k - 1);
  const std::size_t words = (cuts + 63) / 64;

  std::stable_sort(a.entries.begin(), a.entries.end(),
                   [](const WeightedPartition& x, const WeightedPartition& y) { return x.weight > y.weight; });

  // Column c is the cut with position 0 on the left and position i on the
  // right iff bit i-1 of c is set. A partition is consistent with a cut
  // when each element sits on the same side as its block label.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::uint32_t> pivots;
  std::vector<WeightedPartition> kept;
  std::vector<std::uint64_t> row(words);
  for (const WeightedPartition& e : a.entries) {
    const Labels l = unpack(e.code, k);
    std::fill(row.begin(), row.end(), 0);
    for (std::uint32_t c = 0; c < cuts; ++c) {
      const std::uint32_t side = c << 1;
      bool consistent = true;
      for (int i = 1; i < k && consistent; ++i) {
        consistent = ((side >> i) & 1u) == ((side >> l[static_cast<std::size_t>(i)]) & 1u);
      }
      if (consistent) row[c / 64] |= std::uint64_t{1} << (c % 64);
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint32_t p = pivots[b];
      if ((row[p / 64] >> (p % 64)) & 1u) {
        for (std::size_t w = 0; w < words; ++w) row[w] ^= basis[b][w];
      }
    }
    std::uint32_t pivot = cuts;
    for (std::size_t w = 0; w < words && pivot == cuts; ++w) {
      if (row[w]) pivot = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w])));
    }
    if (pivot == cuts) continue;
    // Keep the basis fully reduced on pivot columns.
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if ((basis[b][pivot / 64] >> (pivot % 64)) & 1u) {
        for (std::size_t w = 0; w < words; ++w) basis[b][w] ^= row[w];
      }
    }
    basis.push_back(row);
    pivots.push_back(pivot);
    kept.push_back(e);
  }
  a.entries = std::move(kept);
  return a;
}

std::optional<Weight> opt(const Partition& q, const WeightedPartitionSet& a) {
  if (q.ground != a.ground) throw Error("partition ground sets differ");
  std::optional<Weight> best;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (join_partitions(a.partition(i), q).num_blocks() <= 1 && (!best || a.entries[i].weight > *best)) {
      best = a.entries[i].weight;
    }
  }
  return best;
}

WeightedPartitionSet op_union(WeightedPartitionSet a, const WeightedPartitionSet& b) {
  if (a.ground != b.ground) throw Error("union of partition sets over different ground sets");
  a.entries.insert(a.entries.end(), b.entries.begin(), b.entries.end());
  return rmc(std::move(a));
}

WeightedPartitionSet op_insert(std::span<const Vertex> x, const WeightedPartitionSet& a) {
  const std::vector<Vertex> add = sorted_unique(x);
  for (Vertex v : add) {
    if (std::binary_search(a.ground.begin(), a.ground.end(), v)) throw Error("inserted element already in ground set");
  }
  const Merge m = merge_grounds(a.ground, add);
  const int k_from = static_cast<int>(a.ground.size());
  const int k_to = static_cast<int>(m.ground.size());
  WeightedPartitionSet out{m.ground, {}};
  out.entries.reserve(a.entries.size());
  for (const WeightedPartition& e : a.entries) {
    Labels parent = lifted(e.code, k_from, m.pos_a, k_to);
    WeightedPartition n = e;
    n.code = close(parent, k_to);
    out.entries.push_back(n);
  }
  return out;
}

WeightedPartitionSet op_shift(Weight w, WeightedPartitionSet a) {
  for (auto& e : a.entries) e.weight += w;
  return a;
}

WeightedPartitionSet op_glue(std::span<const Vertex> x, const WeightedPartitionSet& a) {
  const std::vector<Vertex> block = sorted_unique(x);
  const Merge m = merge_grounds(a.ground, block);
  const int k_from = static_cast<int>(a.ground.size());
  const int k_to = static_cast<int>(m.ground.size());
  WeightedPartitionSet out{m.ground, {}};
  out.entries.reserve(a.entries.size());
  for (const WeightedPartition& e : a.entries) {
    Labels parent = lifted(e.code, k_from, m.pos_a, k_to);
    for (std::size_t i = 1; i < m.pos_b.size(); ++i) unite(parent, m.pos_b[0], m.pos_b[i]);
    WeightedPartition n = e;
    n.code = close(parent, k_to);
    out.entries.push_back(n);
  }
  return rmc(std::move(out));
}

WeightedPartitionSet op_project(std::span<const Vertex> x, const WeightedPartitionSet& a) {
  const std::vector<Vertex> drop = sorted_unique(x);
  if (!is_subset(drop, a.ground)) throw Error("projected elements outside ground set");
  const int k = static_cast<int>(a.ground.size());
  std::vector<char> dropped(static_cast<std::size_t>(k), 0);
  WeightedPartitionSet out;
  for (int i = 0; i < k; ++i) {
    dropped[static_cast<std::size_t>(i)] =
        std::binary_search(drop.begin(), drop.end(), a.ground[static_cast<std::size_t>(i)]) ? 1 : 0;
    if (!dropped[static_cast<std::size_t>(i)]) out.ground.push_back(a.ground[static_cast<std::size_t>(i)]);
  }
  for (const WeightedPartition& e : a.entries) {
    const Labels l = unpack(e.code, k);
    // A block made only of dropped elements would be cut off for good.
    std::array<bool, kMaxGround> block_survives{};
    for (int i = 0; i < k; ++i) {
      if (!dropped[static_cast<std::size_t>(i)]) block_survives[static_cast<std::size_t>(l[static_cast<std::size_t>(i)])] = true;
    }
    bool ok = true;
    Labels ids{};
    int kk = 0;
    for (int i = 0; i < k && ok; ++i) {
      if (dropped[static_cast<std::size_t>(i)]) {
        ok = block_survives[static_cast<std::size_t>(l[static_cast<std::size_t>(i)])];
      } else {
        ids[static_cast<std::size_t>(kk++)] = l[static_cast<std::size_t>(i)];
      }
    }
    if (!ok) continue;
    WeightedPartition n = e;
    n.code = canonical(ids, kk);
    out.entries.push_back(n);
  }
  return rmc(std::move(out));
}

WeightedPartitionSet op_join(const WeightedPartitionSet& a, const WeightedPartitionSet& b) {
  const Merge m = merge_grounds(a.ground, b.ground);
  const int ka = static_cast<int>(a.ground.size());
  const int kb = static_cast<int>(b.ground.size());
  const int k = static_cast<int>(m.ground.size());
  WeightedPartitionSet out{m.ground, {}};
  out.entries.reserve(a.entries.size() * b.entries.size());
  for (const WeightedPartition& x : a.entries) {
    const Labels base = lifted(x.code, ka, m.pos_a, k);
    for (const WeightedPartition& y : b.entries) {
      Labels parent = base;
      const Labels ly = unpack(y.code, kb);
      for (int i = 0; i < kb; ++i) {
        unite(parent, m.pos_b[static_cast<std::size_t>(i)], m.pos_b[static_cast<std::size_t>(ly[static_cast<std::size_t>(i)])]);
      }
      WeightedPartition n;
      n.code = close(parent, k);
      n.weight = x.weight + y.weight;
      n.prov_a = x.prov_a;
      n.prov_b = y.prov_a;
      out.entries.push_back(n);
    }
  }
  return rmc(std::move(out));
}

}  // namespace wcm
