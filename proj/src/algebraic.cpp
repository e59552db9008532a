#include "gspec/algebraic.hpp"

#include "gspec/linalg.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace gspec {

DisconnectedGraphError::DisconnectedGraphError(Vertex first, Vertex second)
    : PreconditionError("graph is disconnected: vertices " + std::to_string(first) + " and " +
                        std::to_string(second) + " lie in different components"),
      first_(first),
      second_(second) {}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) adj[static_cast<std::size_t>(u)] = g.neighbors(u);
  for (Vertex s = 0; s < n; ++s) {
    auto& row = dist[static_cast<std::size_t>(s)];
    std::queue<Vertex> q;
    row[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : adj[static_cast<std::size_t>(u)]) {
        if (row[static_cast<std::size_t>(w)] < 0) {
          row[static_cast<std::size_t>(w)] = row[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
  }
  return dist;
}

namespace {

std::vector<std::vector<int>> connected_distances(const Graph& g) {
  auto dist = all_pairs_distances(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[0][static_cast<std::size_t>(v)] < 0) throw DisconnectedGraphError(0, v);
  }
  return dist;
}

}  // namespace

IntMatrix DistanceMatrices::at(int i) const {
  if (i >= 0 && i < static_cast<int>(matrices.size())) return matrices[static_cast<std::size_t>(i)];
  const Index n = matrices.empty() ? 0 : matrices.front().rows();
  return IntMatrix::Zero(n, n);
}

DistanceMatrices distance_matrices(const Graph& g) {
  const int n = g.order();
  const auto dist = connected_distances(g);
  int d = 0;
  for (const auto& row : dist) {
    for (int v : row) d = std::max(d, v);
  }
  DistanceMatrices out;
  out.matrices.assign(static_cast<std::size_t>(d) + 1, IntMatrix::Zero(n, n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      out.matrices[static_cast<std::size_t>(dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])](u, v) = 1;
    }
  }
  return out;
}

DrgResult drg_intersection_array(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw PreconditionError("drg_intersection_array: graph has no vertices");
  const auto dist = connected_distances(g);
  int d = 0;
  for (const auto& row : dist) {
    for (int v : row) d = std::max(d, v);
  }
  auto at = [&](Vertex u, Vertex v) { return dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; };
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) adj[static_cast<std::size_t>(u)] = g.neighbors(u);
  for (Vertex u = 1; u < n; ++u) {
    const int k0 = static_cast<int>(adj[0].size());
    const int ku = static_cast<int>(adj[static_cast<std::size_t>(u)].size());
    if (ku != k0) return {std::nullopt, DrgViolation{'b', 0, 0, 0, u, u, k0, ku}};
  }
  for (Vertex u = 1; u < n; ++u) {
    const int k0 = static_cast<int>(adj[0].size());
    const int ku = static_cast<int>(adj[static_cast<std::size_t>(u)].size());
    if (ku != k0) return {std::nullopt, DrgViolation{'b', 0, 0, 0, u, u, k0, ku}};
  }

  struct Seen {
    bool set = false;
    Vertex u = 0, v = 0;
    int b = 0, c = 0;
  };
  std::vector<Seen> seen(static_cast<std::size_t>(d) + 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const int i = at(u, v);
      int b = 0, c = 0;
      for (Vertex w : adj[static_cast<std::size_t>(v)]) {
        if (at(u, w) == i + 1) ++b;
        if (at(u, w) == i - 1) ++c;
      }
      auto& ref = seen[static_cast<std::size_t>(i)];
      if (!ref.set) {
        ref = Seen{true, u, v, b, c};
        continue;
      }
      if (ref.b != b) return {std::nullopt, DrgViolation{'b', i, ref.u, ref.v, u, v, ref.b, b}};
      if (ref.c != c) return {std::nullopt, DrgViolation{'c', i, ref.u, ref.v, u, v, ref.c, c}};
    }
  }
  IntersectionArray arr;
  for (int i = 0; i < d; ++i) arr.b.push_back(seen[static_cast<std::size_t>(i)].b);
  for (int i = 1; i <= d; ++i) arr.c.push_back(seen[static_cast<std::size_t>(i)].c);
  return {arr, std::nullopt};
}

std::optional<SrgParameters> srg_parameters(const Graph& g) {
  const auto k = g.regular_degree();
  if (!k) return std::nullopt;
  const int n = g.order();
  std::optional<int> a, c;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      int common = 0;
      for (Vertex w = 0; w < n; ++w) {
        if (g.has_edge(u, w) && g.has_edge(v, w)) ++common;
      }
      auto& slot = g.has_edge(u, v) ? a : c;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
  }
  return SrgParameters{n, *k, a.value_or(0), c.value_or(0)};
}

PairPartition walk_regular_partition(const Graph& g) {
  const int n = g.order();
  const IntMatrix a = g.adjacency();
  PairPartition out;
  out.d = min_poly(a).degree() - 1;
  std::vector<IntMatrix> powers;
  IntMatrix current = identity(n);
  for (int l = 0; l <= out.d; ++l) {
    powers.push_back(current);
    current = (current * a).eval();
  }
  std::map<std::vector<Integer>, std::vector<std::pair<Vertex, Vertex>>> groups;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Integer> w;
      w.reserve(powers.size());
      for (const auto& p : powers) w.push_back(p(u, v));
      groups[std::move(w)].emplace_back(u, v);
    }
  }
  for (auto& [w, pairs] : groups) {
    WalkClass cls;
    cls.walk_vector = w;
    cls.indicator = IntMatrix::Zero(n, n);
    for (const auto& [u, v] : pairs) cls.indicator(u, v) = 1;
    cls.size = pairs.size();
    out.classes.push_back(std::move(cls));
  }
  return out;
}

QuotientPolynomialVerdict is_quotient_polynomial(const Graph& g) {
  const auto part = walk_regular_partition(g);
  QuotientPolynomialVerdict v;
  v.classes = part.classes.size();
  v.d_plus_one = static_cast<std::size_t>(part.d + 1);
  if (v.classes < v.d_plus_one) {
    throw std::logic_error("walk-regular partition has " + std::to_string(v.classes) +
                           " classes, fewer than the adjacency algebra dimension " + std::to_string(v.d_plus_one));
  }
  v.holds = v.classes == v.d_plus_one;
  return v;
}

}  // namespace gspec
