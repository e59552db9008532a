#include "gspec/graph.hpp"

#include "gspec/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace gspec {

Graph::Graph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
  if (n < 0) throw PreconditionError("graph order must be non-negative");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} out of range for order " + std::to_string(n));
    }
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    set_edge(u, v);
  }
}

Graph Graph::from_predicate(int n, const std::function<bool(Vertex, Vertex)>& adjacent) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adjacent(u, v)) g.set_edge(u, v);
    }
  }
  return g;
}

void Graph::set_edge(Vertex u, Vertex v) {
  bits_[row_offset(u) + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  bits_[row_offset(v) + static_cast<std::size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
}

int Graph::degree(Vertex u) const {
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[row_offset(u) + w]);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Vertex u = 0; u < n_; ++u) total += static_cast<std::size_t>(degree(u));
  return total / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    if (has_edge(u, v)) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const int k = degree(0);
  for (Vertex u = 1; u < n_; ++u) {
    if (degree(u) != k) return std::nullopt;
  }
  return k;
}

bool Graph::is_regular() const { return regular_degree().has_value(); }

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v = 0; v < n_; ++v) {
      if (has_edge(u, v) && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_;
}

bool Graph::has_isolated_vertex() const {
  for (Vertex u = 0; u < n_; ++u) {
    if (degree(u) == 0) return true;
  }
  return false;
}

Permutation::Permutation(std::vector<Vertex> map) : map_(std::move(map)) {
  std::vector<char> hit(map_.size(), 0);
  for (Vertex v : map_) {
    if (v < 0 || static_cast<std::size_t>(v) >= map_.size() || hit[static_cast<std::size_t>(v)]) {
      throw PreconditionError("permutation is not a bijection");
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != static_cast<Vertex>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[static_cast<std::size_t>(map_[i])] = static_cast<Vertex>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw PreconditionError("composing permutations of different sizes");
  std::vector<Vertex> out(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) out[i] = (*this)(other(static_cast<Vertex>(i)));
  return Permutation(std::move(out));
}

Graph Permutation::apply(const Graph& g) const {
  if (g.order() != size()) throw PreconditionError("permutation size differs from graph order");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back((*this)(u), (*this)(v));
  return Graph(g.order(), edges);
}

Graph complement(const Graph& g) {
  return Graph::from_predicate(g.order(), [&](Vertex u, Vertex v) { return !g.has_edge(u, v); });
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  return Graph::from_predicate(g.order() + h.order(), [&](Vertex u, Vertex v) {
    if (u < shift && v < shift) return g.has_edge(u, v);
    if (u >= shift && v >= shift) return h.has_edge(u - shift, v - shift);
    return false;
  });
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  return Graph::from_predicate(static_cast<int>(vertices.size()), [&](Vertex u, Vertex v) {
    return g.has_edge(vertices[static_cast<std::size_t>(u)], vertices[static_cast<std::size_t>(v)]);
  });
}

}  // namespace gspec
