#include "gspec/pebble.hpp"

#include "gspec/errors.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace gspec {

std::string to_string(Winner w) { return w == Winner::Duplicator ? "Duplicator" : "Spoiler"; }

namespace {

// A position assigns each pebble a digit in base B = ng·nh + 1: 0 when the
// pebble is off the board, 1 + u·nh + v when it sits on (u, v).
class Game {
 public:
  Game(const Graph& g, const Graph& h, int k) : g_(g), h_(h), k_(k) {
    base_ = static_cast<std::uint64_t>(g.order()) * static_cast<std::uint64_t>(h.order()) + 1;
    pow_.assign(static_cast<std::size_t>(k) + 1, 1);
    for (int i = 1; i <= k; ++i) pow_[static_cast<std::size_t>(i)] = pow_[static_cast<std::size_t>(i) - 1] * base_;
  }

  std::uint64_t size() const { return pow_.back(); }

  std::uint64_t digit(std::uint64_t pos, int i) const { return pos / pow_[static_cast<std::size_t>(i)] % base_; }

  std::uint64_t place(std::uint64_t pos, int i, Vertex u, Vertex v) const {
    const std::uint64_t d = 1 + static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(h_.order()) + static_cast<std::uint64_t>(v);
    return pos - digit(pos, i) * pow_[static_cast<std::size_t>(i)] + d * pow_[static_cast<std::size_t>(i)];
  }

  bool partial_isomorphism(std::uint64_t pos) const {
    const auto nh = static_cast<std::uint64_t>(h_.order());
    for (int i = 0; i < k_; ++i) {
      const std::uint64_t di = digit(pos, i);
      if (di == 0) continue;
      const auto ui = static_cast<Vertex>((di - 1) / nh), vi = static_cast<Vertex>((di - 1) % nh);
      for (int j = 0; j < i; ++j) {
        const std::uint64_t dj = digit(pos, j);
        if (dj == 0) continue;
        const auto uj = static_cast<Vertex>((dj - 1) / nh), vj = static_cast<Vertex>((dj - 1) % nh);
        if ((ui == uj) != (vi == vj)) return false;
        if (g_.has_edge(ui, uj) != h_.has_edge(vi, vj)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  int k_;
  std::uint64_t base_;
  std::vector<std::uint64_t> pow_;
};

constexpr std::int32_t kAlive = std::numeric_limits<std::int32_t>::max();

struct Move {
  int pebble;
  int side;
  Vertex vertex;
};

}  // namespace

PebbleResult pebble_game(const Graph& g, const Graph& h, int k, std::size_t state_limit) {
  if (k < 1) throw PreconditionError("pebble game needs k >= 1");
  const double estimate = std::pow(static_cast<double>(g.order()) * h.order() + 1, k);
  if (estimate > static_cast<double>(state_limit)) {
    throw ResourceLimitError("pebble game state space (" + std::to_string(g.order()) + "*" +
                             std::to_string(h.order()) + "+1)^" + std::to_string(k) + " ~ " +
                             std::to_string(static_cast<unsigned long long>(estimate)) + " positions exceeds the limit of " +
                             std::to_string(state_limit));
  }
  const Game game(g, h, k);
  const std::uint64_t total = game.size();
  // died[p] is the round in which p was removed (0: not a partial
  // isomorphism), or kAlive.
  std::vector<std::int32_t> died(total);
  std::vector<Move> refutation(total, Move{0, 0, 0});
  for (std::uint64_t p = 0; p < total; ++p) died[p] = game.partial_isomorphism(p) ? kAlive : 0;

  const Graph* sides[2] = {&g, &h};
  auto target = [&](std::uint64_t p, int i, int side, Vertex a, Vertex b) {
    return side == 0 ? game.place(p, i, a, b) : game.place(p, i, b, a);
  };
  // Spoiler's move (i, side, a) is refuted from p unless some answer stays
  // alive, judged against the set at the start of the round.
  auto has_answer = [&](std::uint64_t p, int i, int side, Vertex a, std::int32_t round) {
    const Graph& other = *sides[1 - side];
    for (Vertex b = 0; b < other.order(); ++b) {
      if (died[target(p, i, side, a, b)] >= round) return true;
    }
    return false;
  };

  int round = 0;
  std::vector<std::uint64_t> removed;
  while (true) {
    ++round;
    removed.clear();
    for (std::uint64_t p = 0; p < total; ++p) {
      if (died[p] != kAlive) continue;
      bool refuted = false;
      for (int i = 0; i < k && !refuted; ++i) {
        for (int side = 0; side < 2 && !refuted; ++side) {
          for (Vertex a = 0; a < sides[side]->order(); ++a) {
            if (!has_answer(p, i, side, a, kAlive)) {
              refutation[p] = Move{i, side, a};
              refuted = true;
              break;
            }
          }
        }
      }
      if (refuted) removed.push_back(p);
    }
    if (removed.empty()) break;
    for (std::uint64_t p : removed) died[p] = round;
    // Once the empty position falls, every position on a winning line for
    // Spoiler already has its final round.
    if (died[0] != kAlive) break;
  }

  PebbleResult result;
  result.positions = static_cast<std::size_t>(total);
  result.rounds = died[0] == kAlive ? round - 1 : round;
  if (died[0] == kAlive) {
    result.winner = Winner::Duplicator;
    return result;
  }
  result.winner = Winner::Spoiler;
  std::uint64_t p = 0;
  while (died[p] > 0) {
    const Move m = refutation[p];
    PebbleMove pm{m.pebble, m.side, m.vertex, std::nullopt};
    const Graph& other = *sides[1 - m.side];
    std::int32_t best = -1;
    std::uint64_t next = p;
    for (Vertex b = 0; b < other.order(); ++b) {
      const std::uint64_t q = target(p, m.pebble, m.side, m.vertex, b);
      if (died[q] > best) {
        best = died[q];
        next = q;
        pm.duplicator_vertex = b;
      }
    }
    result.spoiler_line.push_back(pm);
    if (!pm.duplicator_vertex) break;
    p = next;
  }
  return result;
}

}  // namespace gspec
