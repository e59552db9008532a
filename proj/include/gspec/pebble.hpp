#pragma once

#include "gspec/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gspec {

enum class Winner { Duplicator, Spoiler };

std::string to_string(Winner w);

/// One round of play: Spoiler puts `pebble` on `spoiler_vertex` in graph
/// `side` (0 for the first graph, 1 for the second) and Duplicator answers
/// in the other graph. `duplicator_vertex` is empty only when the other
/// graph has no vertices.
struct PebbleMove {
  int pebble = 0;
  int side = 0;
  Vertex spoiler_vertex = 0;
  std::optional<Vertex> duplicator_vertex;
};

struct PebbleResult {
  Winner winner = Winner::Duplicator;
  /// For a Spoiler win: a winning line against Duplicator's most stubborn
  /// defence. After the last move the pebbled pairs are no longer a partial
  /// isomorphism.
  std::vector<PebbleMove> spoiler_line;
  std::size_t positions = 0;
  int rounds = 0;
};

inline constexpr std::size_t kDefaultPebbleStateLimit = std::size_t{1} << 25;

/// Winner of the k-pebble game on (g, h), which is Duplicator exactly when
/// g and h satisfy the same k-variable first-order sentences. Throws
/// PreconditionError for k < 1 and ResourceLimitError when
/// (|g|·|h| + 1)^k exceeds `state_limit`.
PebbleResult pebble_game(const Graph& g, const Graph& h, int k,
                         std::size_t state_limit = kDefaultPebbleStateLimit);

}  // namespace gspec
