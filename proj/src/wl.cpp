#include "gspec/wl.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>

namespace gspec {

namespace {

// Replaces each signature (a fixed-stride row of `sigs`) by the rank of its
// distinct value in sorted order; returns the number of distinct values.
int rank_signatures(const std::vector<std::int64_t>& sigs, std::size_t stride, std::vector<int>& out) {
  const std::size_t count = stride == 0 ? 0 : sigs.size() / stride;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return std::span<const std::int64_t>(sigs.data() + i * stride, stride); };
  auto less = [&](std::size_t a, std::size_t b) {
    auto ra = row(a);
    auto rb = row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  };
  std::sort(order.begin(), order.end(), less);
  out.assign(count, 0);
  int next = -1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k == 0 || less(order[k - 1], order[k])) ++next;
    out[order[k]] = next;
  }
  return next + 1;
}

ColorHistogram histogram_of(const std::vector<int>& colors) {
  std::map<int, int> counts;
  for (int c : colors) ++counts[c];
  return {counts.begin(), counts.end()};
}

ColorHistogram histogram_of(const std::vector<int>& colors, std::size_t begin, std::size_t end) {
  std::map<int, int> counts;
  for (std::size_t i = begin; i < end; ++i) ++counts[colors[i]];
  return {counts.begin(), counts.end()};
}

int count_distinct(const std::vector<int>& colors) {
  std::vector<int> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

}  // namespace

Coloring color_refinement(const Graph& g, const std::vector<int>& initial) {
  const int n = g.order();
  if (static_cast<int>(initial.size()) != n) throw std::invalid_argument("initial coloring size differs from order");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  int max_degree = 0;
  for (Vertex u = 0; u < n; ++u) {
    adj[static_cast<std::size_t>(u)] = g.neighbors(u);
    max_degree = std::max(max_degree, g.degree(u));
  }

  Coloring result;
  {
    std::vector<std::int64_t> sigs(initial.begin(), initial.end());
    rank_signatures(sigs, 1, result.colors);
  }
  int classes = count_distinct(result.colors);
  // Signature: old color, degree, sorted neighbor colors, padded with -1.
  const std::size_t stride = static_cast<std::size_t>(max_degree) + 2;
  std::vector<std::int64_t> sigs(static_cast<std::size_t>(n) * stride);
  std::vector<int> next;
  for (int round = 0;; ++round) {
    if (round > n + 1) throw std::logic_error("color refinement exceeded its round bound");
    for (Vertex u = 0; u < n; ++u) {
      auto* s = sigs.data() + static_cast<std::size_t>(u) * stride;
      const auto& nb = adj[static_cast<std::size_t>(u)];
      s[0] = result.colors[static_cast<std::size_t>(u)];
      s[1] = static_cast<std::int64_t>(nb.size());
      for (std::size_t i = 0; i < nb.size(); ++i) s[2 + i] = result.colors[static_cast<std::size_t>(nb[i])];
      std::sort(s + 2, s + 2 + nb.size());
      std::fill(s + 2 + nb.size(), s + stride, -1);
    }
    const int refined = rank_signatures(sigs, stride, next);
    result.colors.swap(next);
    if (refined == classes) break;
    classes = refined;
    ++result.rounds;
  }
  result.histogram = histogram_of(result.colors);
  return result;
}

Coloring color_refinement(const Graph& g) {
  return color_refinement(g, std::vector<int>(static_cast<std::size_t>(g.order()), 0));
}

EquivalenceVerdict c2_equivalence(const Graph& g, const Graph& h) {
  const auto joint = color_refinement(disjoint_union(g, h));
  const auto split = static_cast<std::size_t>(g.order());
  EquivalenceVerdict v;
  v.left = histogram_of(joint.colors, 0, split);
  v.right = histogram_of(joint.colors, split, joint.colors.size());
  v.equivalent = g.order() == h.order() && v.left == v.right;
  return v;
}

bool c2_equivalent(const Graph& g, const Graph& h) { return c2_equivalence(g, h).equivalent; }

PairColoring wl2_refinement(const Graph& g) {
  const int n = g.order();
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  PairColoring result;
  result.n = n;
  {
    std::vector<std::int64_t> init(nn);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        init[static_cast<std::size_t>(u) * n + v] = u == v ? 0 : (g.has_edge(u, v) ? 1 : 2);
      }
    }
    rank_signatures(init, 1, result.colors);
  }
  int classes = count_distinct(result.colors);
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  std::vector<std::int64_t> sigs(nn * stride);
  std::vector<int> next;
  const int round_cap = std::max(1, n * n);
  for (int round = 0;; ++round) {
    if (round > round_cap) throw std::logic_error("2-WL exceeded the n^2 round bound");
    const std::int64_t base = classes;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t idx = static_cast<std::size_t>(u) * n + v;
        auto* s = sigs.data() + idx * stride;
        s[0] = result.colors[idx];
        for (Vertex w = 0; w < n; ++w) {
          s[1 + w] = result.colors[static_cast<std::size_t>(u) * n + w] * base +
                     result.colors[static_cast<std::size_t>(w) * n + v];
        }
        std::sort(s + 1, s + stride);
      }
    }
    const int refined = rank_signatures(sigs, stride, next);
    result.colors.swap(next);
    if (refined == classes) break;
    classes = refined;
    ++result.rounds;
  }
  result.histogram = histogram_of(result.colors);
  return result;
}

EquivalenceVerdict c3_equivalence(const Graph& g, const Graph& h) {
  const auto joint = wl2_refinement(disjoint_union(g, h));
  const int ng = g.order();
  const int total = joint.n;
  std::map<int, int> left;
  std::map<int, int> right;
  for (Vertex u = 0; u < total; ++u) {
    for (Vertex v = 0; v < total; ++v) {
      if (u < ng && v < ng) ++left[joint(u, v)];
      if (u >= ng && v >= ng) ++right[joint(u, v)];
    }
  }
  EquivalenceVerdict verdict;
  verdict.left.assign(left.begin(), left.end());
  verdict.right.assign(right.begin(), right.end());
  verdict.equivalent = g.order() == h.order() && verdict.left == verdict.right;
  return verdict;
}

bool c3_equivalent(const Graph& g, const Graph& h) { return c3_equivalence(g, h).equivalent; }

CoherentBasis coherent_closure_basis(const Graph& g) {
  const auto pc = wl2_refinement(g);
  const int n = g.order();
  CoherentBasis basis;
  const auto classes = static_cast<std::size_t>(pc.num_colors());
  basis.matrices.assign(classes, IntMatrix::Zero(n, n));
  basis.diagonal.assign(classes, false);
  basis.sizes.assign(classes, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const auto c = static_cast<std::size_t>(pc(u, v));
      basis.matrices[c](u, v) = 1;
      basis.sizes[c] += 1;
      if (u == v) basis.diagonal[c] = true;
    }
  }
  return basis;
}

}  // namespace gspec
