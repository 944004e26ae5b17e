#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "wcm/partition.hpp"

namespace wcm::testing {

/// All partitions of a ground set, by restricted growth strings.
inline std::vector<Partition> all_partitions(const std::vector<Vertex>& ground) {
  std::vector<Partition> out;
  const int k = static_cast<int>(ground.size());
  std::vector<int> labels(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == k) {
      out.push_back(Partition::from_labels(ground, labels));
      return;
    }
    for (int l = 0; l <= used; ++l) {
      labels[static_cast<std::size_t>(pos)] = l;
      rec(pos + 1, std::max(used, l + 1));
    }
  };
  if (k == 0) {
    out.push_back(Partition::discrete({}));
  } else {
    rec(0, 0);
  }
  return out;
}

/// opt computed from the definition, independent of reduce.
inline std::optional<Weight> opt_by_definition(const Partition& q, const WeightedPartitionSet& s) {
  std::optional<Weight> best;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (join_partitions(s.partition(i), q).num_blocks() <= 1 && (!best || s.entries[i].weight > *best)) {
      best = s.entries[i].weight;
    }
  }
  return best;
}

}  // namespace wcm::testing
