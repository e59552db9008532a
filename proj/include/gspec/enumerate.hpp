#pragma once

#include "gspec/graph.hpp"

#include <vector>

namespace gspec {

inline constexpr int kMaxEnumerationOrder = 7;

/// One representative of every isomorphism class of simple graphs on n
/// vertices, 0 <= n <= 7, in a fixed order. Graphs on n vertices are grown
/// from the order-(n-1) representatives by attaching a new vertex to every
/// neighbor subset; candidates are bucketed by 1-WL histogram and degree
/// sequence and deduplicated by explicit isomorphism tests.
const std::vector<Graph>& enumerate_nonisomorphic(int n);

}  // namespace gspec
