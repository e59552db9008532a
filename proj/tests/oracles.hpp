#pragma once

// Slow, obviously-correct reference computations used only by the tests.
// None of them share code with the library beyond the Graph type.

#include "gspec/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using gspec::Graph;
using gspec::Vertex;
using Mat = std::vector<std::vector<long long>>;

inline Mat adjacency(const Graph& g) {
  const int n = g.order();
  Mat a(n, std::vector<long long>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) a[u][v] = g.has_edge(u, v) ? 1 : 0;
  return a;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat power(const Graph& g, int l) {
  const int n = g.order();
  Mat p(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) p[i][i] = 1;
  const Mat a = adjacency(g);
  for (int i = 0; i < l; ++i) p = multiply(p, a);
  return p;
}

inline long long trace_power(const Graph& g, int l) {
  const Mat p = power(g, l);
  long long t = 0;
  for (std::size_t i = 0; i < p.size(); ++i) t += p[i][i];
  return t;
}

inline long long total_power(const Graph& g, int l) {
  long long t = 0;
  for (const auto& row : power(g, l))
    for (long long v : row) t += v;
  return t;
}

// Leibniz expansion over all permutations.
inline long long permutation_determinant(const Mat& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    long long term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m[i][p[i]];
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

// Characteristic polynomial det(xI - A) by interpolation of permutation
// determinants at x = 0..n, ascending coefficients.
inline std::vector<long long> char_poly_by_interpolation(const Mat& a) {
  const int n = static_cast<int>(a.size());
  std::vector<long double> values(n + 1);
  for (int x = 0; x <= n; ++x) {
    Mat m = a;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = (i == j ? x : 0) - a[i][j];
    values[x] = static_cast<long double>(permutation_determinant(m));
  }
  // Newton forward differences into monomial coefficients.
  std::vector<long double> coeffs(n + 1, 0);
  std::vector<long double> diff = values;
  std::vector<long double> basis{1};  // prod_{j<k} (x - j)
  long double fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    const long double c = diff[0] / fact;
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += c * basis[i];
    for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
    std::vector<long double> next(basis.size() + 1, 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * k;
    }
    basis = next;
  }
  std::vector<long long> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = static_cast<long long>(coeffs[i] + (coeffs[i] < 0 ? -0.5L : 0.5L));
  return out;
}

inline std::vector<std::vector<int>> bfs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (g.has_edge(u, w) && d[s][w] < 0) {
          d[s][w] = d[s][u] + 1;
          q.push(w);
        }
      }
    }
  }
  return d;
}

inline int common_neighbors(const Graph& g, int u, int v) {
  int c = 0;
  for (int w = 0; w < g.order(); ++w) c += g.has_edge(u, w) && g.has_edge(v, w);
  return c;
}

// Number of isomorphism classes of graphs on n vertices by Burnside's
// lemma: the average over S_n of 2^(cycles of the induced action on pairs).
inline long long polya_graph_count(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long sum = 0;
  long long perms = 0;
  do {
    ++perms;
    std::set<std::pair<int, int>> seen;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (seen.count({i, j})) continue;
        ++cycles;
        int a = i, b = j;
        while (!seen.count({std::min(a, b), std::max(a, b)})) {
          seen.insert({std::min(a, b), std::max(a, b)});
          a = p[a];
          b = p[b];
        }
      }
    }
    sum += 1LL << cycles;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum / perms;
}

// Canonical form as the lexicographically smallest adjacency bit string over
// all relabelings.
inline std::vector<bool> brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code.push_back(g.has_edge(p[i], p[j]));
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.edge_count() == h.edge_count() && brute_canonical(g) == brute_canonical(h);
}

}  // namespace oracle
