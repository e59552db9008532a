#include "gspec/enumerate.hpp"

#include "gspec/errors.hpp"
#include "gspec/isomorphism.hpp"
#include "gspec/wl.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace gspec {

namespace {

using BucketKey = std::pair<std::vector<int>, ColorHistogram>;

BucketKey bucket_key(const Graph& g) {
  std::vector<int> degrees;
  for (Vertex u = 0; u < g.order(); ++u) degrees.push_back(g.degree(u));
  std::sort(degrees.begin(), degrees.end());
  return {std::move(degrees), color_refinement(g).histogram};
}

std::vector<Graph> extend_level(const std::vector<Graph>& previous, int n) {
  std::vector<Graph> reps;
  std::map<BucketKey, std::vector<std::size_t>> buckets;
  const unsigned subsets = 1u << (n - 1);
  for (const Graph& base : previous) {
    const auto base_edges = base.edges();
    for (unsigned mask = 0; mask < subsets; ++mask) {
      std::vector<Edge> edges = base_edges;
      for (int v = 0; v < n - 1; ++v) {
        if (mask & (1u << v)) edges.emplace_back(v, n - 1);
      }
      Graph candidate(n, edges);
      auto& bucket = buckets[bucket_key(candidate)];
      const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
        return are_isomorphic(reps[i], candidate).has_value();
      });
      if (!seen) {
        bucket.push_back(reps.size());
        reps.push_back(std::move(candidate));
      }
    }
  }
  return reps;
}

}  // namespace

const std::vector<Graph>& enumerate_nonisomorphic(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw PreconditionError("built-in enumeration supports 0 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                            ", got " + std::to_string(n) + "; supply larger corpora as graph6 files");
  }
  static std::mutex mutex;
  static std::array<std::vector<Graph>, kMaxEnumerationOrder + 1> levels;
  static int computed = -1;
  std::lock_guard lock(mutex);
  if (computed < 0) {
    levels[0] = {Graph(0)};
    computed = 0;
  }
  while (computed < n) {
    levels[static_cast<std::size_t>(computed + 1)] = extend_level(levels[static_cast<std::size_t>(computed)], computed + 1);
    ++computed;
  }
  return levels[static_cast<std::size_t>(n)];
}

}  // namespace gspec
