#pragma once

#include "gspec/graph.hpp"
#include "gspec/types.hpp"

#include <utility>
#include <vector>

namespace gspec {

/// (color id, number of elements carrying it), sorted by color id.
using ColorHistogram = std::vector<std::pair<int, int>>;

/// Stable vertex coloring from color refinement (1-WL). Color ids are the
/// ranks of the final round's signatures in sorted order, so equal
/// refinement histories give identical ids.
struct Coloring {
  std::vector<int> colors;
  ColorHistogram histogram;
  int rounds = 0;

  int num_colors() const { return static_cast<int>(histogram.size()); }
};

/// Stable coloring of ordered vertex pairs from 2-WL, stored row-major.
struct PairColoring {
  int n = 0;
  std::vector<int> colors;
  ColorHistogram histogram;
  int rounds = 0;

  int operator()(Vertex u, Vertex v) const { return colors[static_cast<std::size_t>(u) * n + v]; }
  int num_colors() const { return static_cast<int>(histogram.size()); }
};

/// Verdict of a joint refinement on g ⊎ h, with both sides' stable
/// histograms in the shared color alphabet.
struct EquivalenceVerdict {
  bool equivalent = false;
  ColorHistogram left;
  ColorHistogram right;
};

/// The 01-basis of the coherent closure: one 0/1 matrix per stable pair
/// color, indexed by color id.
struct CoherentBasis {
  std::vector<IntMatrix> matrices;
  std::vector<bool> diagonal;  // whether class i lies on the diagonal
  std::vector<int> sizes;

  std::size_t size() const { return matrices.size(); }
};

Coloring color_refinement(const Graph& g);
/// Refinement from a given initial coloring (any integer labels).
Coloring color_refinement(const Graph& g, const std::vector<int>& initial);

EquivalenceVerdict c2_equivalence(const Graph& g, const Graph& h);
bool c2_equivalent(const Graph& g, const Graph& h);

PairColoring wl2_refinement(const Graph& g);

EquivalenceVerdict c3_equivalence(const Graph& g, const Graph& h);
bool c3_equivalent(const Graph& g, const Graph& h);

CoherentBasis coherent_closure_basis(const Graph& g);

}  // namespace gspec
