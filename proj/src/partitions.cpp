#include "gspec/partitions.hpp"

#include "gspec/errors.hpp"

namespace gspec {

namespace {

void generate(int remaining, int max_part, Partition& current,
              const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    for (int mult = remaining / part; mult >= 1; --mult) {
      current.push_back({part, mult});
      generate(remaining - part * mult, part - 1, current, visit);
      current.pop_back();
    }
  }
}

}  // namespace

void for_each_partition(int r, const std::function<void(const Partition&)>& visit) {
  if (r < 0) throw PreconditionError("integer_partitions: r must be non-negative");
  Partition current;
  generate(r, r, current, visit);
}

PartitionSet integer_partitions(int r) {
  PartitionSet out;
  for_each_partition(r, [&](const Partition& p) { out.push_back(p); });
  return out;
}

long long partition_count(int r) {
  if (r < 0) return 0;
  std::vector<long long> p(static_cast<std::size_t>(r) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= r; ++part) {
    for (int s = part; s <= r; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  }
  return p[static_cast<std::size_t>(r)];
}

}  // namespace gspec
