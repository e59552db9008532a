#pragma once

#include "gspec/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gspec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, stored as n rows of n bits.
/// Immutable once constructed; the adjacency is symmetric with an empty
/// diagonal.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  /// Builds the graph with u ~ v iff `adjacent(u, v)` for u < v.
  static Graph from_predicate(int n, const std::function<bool(Vertex, Vertex)>& adjacent);

  int order() const { return n_; }
  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[row_offset(u) + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
  }
  int degree(Vertex u) const;
  std::size_t edge_count() const;
  std::vector<Vertex> neighbors(Vertex u) const;
  std::vector<Edge> edges() const;

  bool is_regular() const;
  /// Degree when regular, otherwise empty. The graph on zero vertices is
  /// regular of degree 0.
  std::optional<int> regular_degree() const;
  bool is_connected() const;
  bool has_isolated_vertex() const;

  template <typename Scalar = Integer>
  Matrix<Scalar> adjacency() const {
    Matrix<Scalar> a = Matrix<Scalar>::Zero(n_, n_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (has_edge(u, v)) a(u, v) = Scalar(1);
      }
    }
    return a;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  std::size_t row_offset(Vertex u) const { return static_cast<std::size_t>(u) * words_; }
  void set_edge(Vertex u, Vertex v);

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A bijection on 0..n-1. Applied to a graph g it yields the graph with edge
/// {map[u], map[v]} for every edge {u, v} of g, i.e. P A P^T with
/// P(map[u], u) = 1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `map` is a bijection on [0, n).
  explicit Permutation(std::vector<Vertex> map);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  Vertex operator()(Vertex v) const { return map_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& map() const { return map_; }
  bool is_identity() const;

  Permutation inverse() const;
  /// (this ∘ other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;
  Graph apply(const Graph& g) const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.map_ == b.map_; }

 private:
  std::vector<Vertex> map_;
};

Graph complement(const Graph& g);
/// Vertices of h are shifted by g.order(); no edges cross the two parts.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace gspec
