#pragma once

#include "gspec/graph.hpp"

#include <optional>

namespace gspec {

/// A permutation p with p.apply(g) == h, if one exists. Backtracking over the
/// vertices of g; candidate images must share g's stable 1-WL color from a
/// joint refinement of g ⊎ h.
std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h);

/// A non-identity automorphism of g, if any.
std::optional<Permutation> nontrivial_automorphism(const Graph& g);

}  // namespace gspec
