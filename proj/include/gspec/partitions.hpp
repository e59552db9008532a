#pragma once

#include <functional>
#include <vector>

namespace gspec {

/// A part r occurring `multiplicity` times.
struct PartitionPart {
  int part = 0;
  int multiplicity = 0;
  friend bool operator==(const PartitionPart&, const PartitionPart&) = default;
};

/// Distinct parts in decreasing order.
using Partition = std::vector<PartitionPart>;
using PartitionSet = std::vector<Partition>;

/// All partitions of r, largest first part first (4, 3+1, 2+2, 2+1+1,
/// 1+1+1+1). The only partition of 0 is the empty one.
PartitionSet integer_partitions(int r);

/// Streams the partitions of r in the same order without materializing
/// them. The reference passed to `visit` is only valid during the call.
void for_each_partition(int r, const std::function<void(const Partition&)>& visit);

/// Number of partitions of r.
long long partition_count(int r);

}  // namespace gspec
