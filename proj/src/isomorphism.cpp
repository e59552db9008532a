#include "gspec/isomorphism.hpp"

#include "gspec/wl.hpp"

#include <algorithm>
#include <utility>

namespace gspec {

namespace {

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, std::vector<int> color_g, std::vector<int> color_h)
      : g_(g), h_(h), color_g_(std::move(color_g)), color_h_(std::move(color_h)) {
    const auto n = static_cast<std::size_t>(g.order());
    image_.assign(n, -1);
    used_.assign(n, 0);
    class_size_.assign(n + 1, 0);
    for (int c : color_g_) ++class_size_[static_cast<std::size_t>(c)];
  }

  std::optional<Permutation> run(std::optional<std::pair<Vertex, Vertex>> forced) {
    if (forced) {
      auto [u, v] = *forced;
      if (color_g_[static_cast<std::size_t>(u)] != color_h_[static_cast<std::size_t>(v)]) return std::nullopt;
      assign(u, v);
      order_.push_back(u);
    }
    build_order();
    if (extend(forced ? 1 : 0)) return Permutation(image_);
    return std::nullopt;
  }

 private:
  // Greedy order: most already-ordered neighbors first, then smaller color
  // classes, then lower vertex id.
  void build_order() {
    const int n = g_.order();
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> links(static_cast<std::size_t>(n), 0);
    for (Vertex u : order_) {
      placed[static_cast<std::size_t>(u)] = 1;
      for (Vertex w : g_.neighbors(u)) ++links[static_cast<std::size_t>(w)];
    }
    while (static_cast<int>(order_.size()) < n) {
      Vertex best = -1;
      for (Vertex u = 0; u < n; ++u) {
        if (placed[static_cast<std::size_t>(u)]) continue;
        if (best < 0) {
          best = u;
          continue;
        }
        const auto key = [&](Vertex x) {
          return std::make_pair(-links[static_cast<std::size_t>(x)],
                                class_size_[static_cast<std::size_t>(color_g_[static_cast<std::size_t>(x)])]);
        };
        if (key(u) < key(best)) best = u;
      }
      placed[static_cast<std::size_t>(best)] = 1;
      for (Vertex w : g_.neighbors(best)) ++links[static_cast<std::size_t>(w)];
      order_.push_back(best);
    }
  }

  void assign(Vertex u, Vertex v) {
    image_[static_cast<std::size_t>(u)] = v;
    used_[static_cast<std::size_t>(v)] = 1;
  }
  void unassign(Vertex u) {
    used_[static_cast<std::size_t>(image_[static_cast<std::size_t>(u)])] = 0;
    image_[static_cast<std::size_t>(u)] = -1;
  }

  bool consistent(std::size_t depth, Vertex u, Vertex v) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex w = order_[i];
      if (g_.has_edge(u, w) != h_.has_edge(v, image_[static_cast<std::size_t>(w)])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    const int want = color_g_[static_cast<std::size_t>(u)];
    for (Vertex v = 0; v < h_.order(); ++v) {
      if (used_[static_cast<std::size_t>(v)] || color_h_[static_cast<std::size_t>(v)] != want) continue;
      if (!consistent(depth, u, v)) continue;
      assign(u, v);
      if (extend(depth + 1)) return true;
      unassign(u);
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> color_g_;
  std::vector<int> color_h_;
  std::vector<int> class_size_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
};

}  // namespace

std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  const auto joint = color_refinement(disjoint_union(g, h));
  const auto split = joint.colors.begin() + g.order();
  std::vector<int> cg(joint.colors.begin(), split);
  std::vector<int> ch(split, joint.colors.end());
  std::vector<int> sg = cg;
  std::vector<int> sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;
  return Matcher(g, h, std::move(cg), std::move(ch)).run(std::nullopt);
}

std::optional<Permutation> nontrivial_automorphism(const Graph& g) {
  const auto coloring = color_refinement(g);
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == u || coloring.colors[static_cast<std::size_t>(u)] != coloring.colors[static_cast<std::size_t>(v)]) {
        continue;
      }
      if (auto p = Matcher(g, g, coloring.colors, coloring.colors).run(std::make_pair(u, v))) return p;
    }
  }
  return std::nullopt;
}

}  // namespace gspec
