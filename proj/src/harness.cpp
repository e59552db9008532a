#include "gspec/harness.hpp"

#include "gspec/algebraic.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/errors.hpp"
#include "gspec/evaluate.hpp"
#include "gspec/formula_builders.hpp"
#include "gspec/generators.hpp"
#include "gspec/graph6.hpp"
#include "gspec/isomorphism.hpp"
#include "gspec/linalg.hpp"
#include "gspec/pebble.hpp"
#include "gspec/spectra.hpp"
#include "gspec/wl.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace gspec {

using json = nlohmann::json;

void for_each_corpus_graph(const SuiteOptions& options, int default_max_n, int min_n,
                           const std::function<void(CorpusGraph&&)>& visit) {
  const int max_n = options.max_n.value_or(default_max_n);
  if (!options.file) {
    if (max_n > kMaxEnumerationOrder) {
      throw ResourceLimitError("enumeration stops at n = " + std::to_string(kMaxEnumerationOrder) +
                               "; pass --file for larger corpora");
    }
    for (int n = std::max(min_n, 0); n <= max_n; ++n) {
      for (const Graph& g : enumerate_nonisomorphic(n)) visit(CorpusGraph{g, write_graph6(g)});
    }
    return;
  }
  std::ifstream in(*options.file);
  if (!in) throw PreconditionError("cannot open corpus file '" + *options.file + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError(*options.file + ":" + std::to_string(lineno) + ": " + e.what(), e.position());
    }
    if (g.order() < min_n || g.order() > max_n) continue;
    visit(CorpusGraph{std::move(g), line});
  }
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

// Thread-safe violation sink; the result is sorted so that reports do not
// depend on scheduling.
class Collector {
 public:
  void add(const std::string& a, const std::string& b, std::string detail) {
    std::lock_guard lock(mutex_);
    items_.push_back({a, b, std::move(detail)});
  }
  std::vector<Violation> take() {
    std::sort(items_.begin(), items_.end());
    return std::move(items_);
  }

 private:
  std::mutex mutex_;
  std::vector<Violation> items_;
};

std::string corpus_label(const SuiteOptions& o, int default_max_n, int min_n) {
  const int max_n = o.max_n.value_or(default_max_n);
  const std::string range = std::to_string(min_n) + " <= n <= " + std::to_string(max_n);
  return o.file ? "file " + *o.file + ", " + range : "all graphs, " + range;
}

std::vector<CorpusGraph> load(const SuiteOptions& o, int default_max_n, int min_n,
                              const std::function<bool(const Graph&)>& keep = {}) {
  std::vector<CorpusGraph> out;
  for_each_corpus_graph(o, default_max_n, min_n, [&](CorpusGraph&& c) {
    if (!keep || keep(c.graph)) out.push_back(std::move(c));
  });
  return out;
}

using PairList = std::vector<std::pair<std::size_t, std::size_t>>;

// All unordered pairs within each bucket, in a stable order.
template <typename Key>
PairList pairs_within(const std::vector<CorpusGraph>& corpus, const std::function<Key(const CorpusGraph&)>& key,
                      std::size_t* buckets = nullptr) {
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < corpus.size(); ++i) groups[key(corpus[i])].push_back(i);
  PairList pairs;
  for (const auto& [k, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) pairs.emplace_back(members[a], members[b]);
    }
  }
  if (buckets) *buckets = groups.size();
  return pairs;
}

Permutation random_permutation(int n, std::uint64_t seed) {
  std::vector<Vertex> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(map.begin(), map.end(), rng);
  return Permutation(std::move(map));
}

std::uint64_t mix_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint64_t out = 0;
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  out = (std::uint64_t{words[0]} << 32) | words[1];
  return out;
}

std::pair<int, ColorHistogram> wl1_key(const CorpusGraph& c) {
  return {c.graph.order(), color_refinement(c.graph).histogram};
}

std::pair<int, ColorHistogram> wl2_key(const CorpusGraph& c) {
  return {c.graph.order(), wl2_refinement(c.graph).histogram};
}

SuiteResult suite_thm1(const SuiteOptions& o) {
  const auto corpus = load(o, 7, 1);
  std::size_t buckets = 0;
  const auto pairs = pairs_within<std::pair<int, ColorHistogram>>(corpus, wl2_key, &buckets);
  Collector sink;
  std::atomic<std::size_t> confirmed{0};
  parallel_for(pairs.size(), o.jobs, [&](std::size_t p) {
    const auto& g = corpus[pairs[p].first];
    const auto& h = corpus[pairs[p].second];
    if (!c3_equivalent(g.graph, h.graph)) return;
    ++confirmed;
    if (!generalized_cospectral(g.graph, h.graph)) {
      sink.add(g.graph6, h.graph6, "C3-equivalent but not generalized cospectral");
    }
  });
  SuiteResult r{"thm1", corpus_label(o, 7, 1), pairs.size(), sink.take()};
  r.details = {{"graphs", corpus.size()}, {"buckets", buckets}, {"c3_equivalent_pairs", confirmed.load()}};
  return r;
}

SuiteResult suite_walks(const SuiteOptions& o, bool gram) {
  const std::string name = gram ? "lem2" : "thm6";
  const auto corpus = load(o, 6, 1);
  const auto pairs = pairs_within<std::pair<int, ColorHistogram>>(corpus, wl1_key);
  Collector sink;
  std::atomic<std::size_t> equivalent{0};
  parallel_for(pairs.size(), o.jobs, [&](std::size_t p) {
    const auto& g = corpus[pairs[p].first];
    const auto& h = corpus[pairs[p].second];
    if (!c2_equivalent(g.graph, h.graph)) return;
    ++equivalent;
    if (gram) {
      if (walk_gram(g.graph) != walk_gram(h.graph)) sink.add(g.graph6, h.graph6, "C2-equivalent but W^T W differ");
    } else if (!walk_equivalent(g.graph, h.graph)) {
      sink.add(g.graph6, h.graph6, "C2-equivalent but not walk-equivalent");
    }
  });
  SuiteResult r{name, corpus_label(o, 6, 1), pairs.size(), sink.take()};
  r.details = {{"graphs", corpus.size()}, {"c2_equivalent_pairs", equivalent.load()}};
  return r;
}

SuiteResult suite_cor1(const SuiteOptions& o) {
  const auto corpus = load(o, 7, 1, [](const Graph& g) { return g.is_regular(); });
  PairList pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) pairs.emplace_back(i, j);
  }
  Collector sink;
  parallel_for(pairs.size(), o.jobs, [&](std::size_t p) {
    const auto& g = corpus[pairs[p].first];
    const auto& h = corpus[pairs[p].second];
    const bool same = g.graph.order() == h.graph.order() && g.graph.regular_degree() == h.graph.regular_degree();
    const bool walk = walk_equivalent(g.graph, h.graph);
    if (same != walk) {
      sink.add(g.graph6, h.graph6,
               same ? "same order and degree but not walk-equivalent" : "walk-equivalent but order or degree differ");
    }
  });
  SuiteResult r{"cor1", corpus_label(o, 7, 1) + ", regular only", pairs.size(), sink.take()};
  r.details = {{"regular_graphs", corpus.size()}};
  return r;
}

SuiteResult suite_cor2(const SuiteOptions& o) {
  Collector sink;
  if (!is_controllable(Graph(1))) sink.add(write_graph6(Graph(1)), "", "K1 is not controllable");
  std::vector<CorpusGraph> corpus;
  std::size_t with_automorphism = 0;
  for_each_corpus_graph(o, 6, 1, [&](CorpusGraph&& c) {
    const bool symmetric = nontrivial_automorphism(c.graph).has_value();
    with_automorphism += symmetric;
    if (!is_controllable(c.graph)) return;
    if (symmetric) sink.add(c.graph6, "", "controllable graph with a nontrivial automorphism");
    corpus.push_back(std::move(c));
  });
  const auto pairs = pairs_within<std::pair<int, ColorHistogram>>(corpus, wl1_key);
  std::atomic<std::size_t> verified{0};
  parallel_for(pairs.size(), o.jobs, [&](std::size_t p) {
    const auto& g = corpus[pairs[p].first];
    const auto& h = corpus[pairs[p].second];
    const bool c2 = c2_equivalent(g.graph, h.graph);
    const bool iso = are_isomorphic(g.graph, h.graph).has_value();
    if (c2 != iso) sink.add(g.graph6, h.graph6, c2 ? "C2-equivalent controllable graphs not isomorphic" : "isomorphic but not C2-equivalent");
    const auto q = controllable_iso(g.graph, h.graph);
    if (q.permutation.has_value() != iso) sink.add(g.graph6, h.graph6, "walk-matrix construction disagrees with isomorphism");
  });
  // Every controllable graph against a random relabeling of itself.
  parallel_for(corpus.size(), o.jobs, [&](std::size_t i) {
    const auto& g = corpus[i];
    const Graph h = random_permutation(g.graph.order(), mix_seed(o.seed, i)).apply(g.graph);
    if (!c2_equivalent(g.graph, h)) {
      sink.add(g.graph6, write_graph6(h), "relabeled copy not C2-equivalent");
      return;
    }
    const auto q = controllable_iso(g.graph, h);
    if (!q.permutation || q.permutation->apply(g.graph) != h) {
      sink.add(g.graph6, write_graph6(h), "Q = W W'^-1 is not a verified permutation");
      return;
    }
    ++verified;
  });
  SuiteResult r{"cor2", corpus_label(o, 6, 1) + ", controllable only", pairs.size() + corpus.size(), sink.take()};
  r.details = {{"controllable_graphs", corpus.size()},
               {"graphs_with_nontrivial_automorphism", with_automorphism},
               {"verified_permutations", verified.load()}};
  return r;
}

SuiteResult suite_thm5(const SuiteOptions& o) {
  Collector sink;
  std::vector<CorpusGraph> corpus;
  std::size_t drgs = 0;
  for_each_corpus_graph(o, 7, 1, [&](CorpusGraph&& c) {
    QuotientPolynomialVerdict qp;
    try {
      qp = is_quotient_polynomial(c.graph);
    } catch (const std::logic_error& e) {
      sink.add(c.graph6, "", e.what());
      return;
    }
    if (c.graph.is_connected() && drg_intersection_array(c.graph).array) {
      ++drgs;
      if (!qp.holds) sink.add(c.graph6, "", "distance-regular but not quotient-polynomial");
    }
    if (qp.holds) corpus.push_back(std::move(c));
  });
  auto by_spectrum = [](const CorpusGraph& c) { return generalized_spectrum(c.graph); };
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : pairs_within<GeneralizedSpectrum>(corpus, by_spectrum)) pairs.insert(p);
  for (const auto& p : pairs_within<std::pair<int, ColorHistogram>>(corpus, wl2_key)) pairs.insert(p);
  const PairList list(pairs.begin(), pairs.end());
  std::atomic<std::size_t> agree_true{0};
  parallel_for(list.size(), o.jobs, [&](std::size_t p) {
    const auto& g = corpus[list[p].first];
    const auto& h = corpus[list[p].second];
    const bool gc = generalized_cospectral(g.graph, h.graph);
    const bool c3 = c3_equivalent(g.graph, h.graph);
    if (gc != c3) {
      sink.add(g.graph6, h.graph6, gc ? "generalized cospectral but not C3-equivalent" : "C3-equivalent but not generalized cospectral");
    } else if (gc) {
      ++agree_true;
    }
  });
  SuiteResult r{"thm5", corpus_label(o, 7, 1) + ", quotient-polynomial only", list.size(), sink.take()};
  r.details = {{"quotient_polynomial_graphs", corpus.size()},
               {"distance_regular_graphs", drgs},
               {"equivalent_pairs", agree_true.load()}};
  return r;
}

struct NamedGraph {
  const char* spec;
  const char* printed_array;  // empty when the array is not pinned
};

const std::vector<NamedGraph>& named_drgs() {
  static const std::vector<NamedGraph> graphs = {
      {"tetrahedron", "{3;1}"},
      {"octahedron", "{4,1;1,4}"},
      {"cube", "{3,2,1;1,2,3}"},
      {"icosahedron", "{5,2,1;1,2,5}"},
      {"dodecahedron", "{3,2,1,1,1;1,1,1,2,3}"},
      {"petersen", "{3,2;1,1}"},
  };
  return graphs;
}

SuiteResult suite_thm4(const SuiteOptions& o) {
  Collector sink;
  auto corpus = load(o, 7, 1, [](const Graph& g) { return g.is_connected(); });
  std::vector<std::optional<IntersectionArray>> actual;
  std::set<IntersectionArray> arrays;
  for (const auto& c : corpus) {
    actual.push_back(drg_intersection_array(c.graph).array);
    if (actual.back()) arrays.insert(*actual.back());
  }
  const std::size_t detected = arrays.size();
  for (const auto& named : named_drgs()) {
    const Graph g = generate(named.spec);
    const auto printed = parse_intersection_array(named.printed_array);
    arrays.insert(printed);
    const auto got = drg_intersection_array(g).array;
    if (got != printed) {
      sink.add(write_graph6(g), "", std::string(named.spec) + " gives " + (got ? got->str() : "no array") +
                                        ", expected " + named.printed_array);
    }
    corpus.push_back(CorpusGraph{g, write_graph6(g)});
    actual.push_back(got);
  }
  const std::vector<IntersectionArray> list(arrays.begin(), arrays.end());
  parallel_for(corpus.size(), o.jobs, [&](std::size_t i) {
    CountingFormulaFactory factory;
    Evaluator ev(corpus[i].graph, factory.shared_store());
    for (const auto& arr : list) {
      const Formula f = factory.formula(factory.drg_sentence(arr));
      const bool holds = ev.evaluate(f);
      const bool expected = actual[i] == arr;
      if (holds != expected) {
        sink.add(corpus[i].graph6, "", "sentence for " + arr.str() + " evaluates to " + (holds ? "true" : "false"));
      }
    }
  });
  SuiteResult r{"thm4", corpus_label(o, 7, 1) + ", connected only, plus named distance-regular graphs",
                corpus.size() * list.size(), sink.take()};
  json arr_json = json::array();
  for (const auto& a : list) arr_json.push_back(a.str());
  r.details = {{"graphs", corpus.size()}, {"arrays", arr_json}, {"arrays_detected_in_corpus", detected}};
  return r;
}

SuiteResult suite_fig1(const SuiteOptions& o) {
  const auto corpus = load(o, 7, 1);
  auto by_spectrum = [](const CorpusGraph& c) { return std::make_pair(c.graph.order(), generalized_spectrum(c.graph)); };
  const auto pairs = pairs_within<std::pair<int, GeneralizedSpectrum>>(corpus, by_spectrum);
  Collector sink;
  json found = json::array();
  int smallest = 0;
  bool fig1_shape = false;
  for (const auto& [i, j] : pairs) {
    const auto& g = corpus[i];
    const auto& h = corpus[j];
    if (are_isomorphic(g.graph, h.graph)) continue;
    const int n = g.graph.order();
    if (!smallest) smallest = n;
    if (n != smallest) continue;
    const bool shape = (g.graph.has_isolated_vertex() && h.graph.is_connected()) ||
                       (h.graph.has_isolated_vertex() && g.graph.is_connected());
    const bool c2 = c2_equivalent(g.graph, h.graph);
    fig1_shape = fig1_shape || (shape && !c2);
    found.push_back({{"first", g.graph6},
                     {"second", h.graph6},
                     {"n", n},
                     {"char_poly", generalized_spectrum(g.graph).phi.str()},
                     {"isolated_vs_connected", shape},
                     {"c2_equivalent", c2}});
  }
  if (found.empty()) {
    sink.add("", "", "no generalized-cospectral nonisomorphic pair in the corpus");
  } else if (!fig1_shape) {
    sink.add("", "", "no smallest pair has one member with an isolated vertex, the other connected and C2-inequivalent");
  }
  SuiteResult r{"fig1", corpus_label(o, 7, 1), pairs.size(), sink.take()};
  r.details = {{"smallest_order", smallest}, {"pairs", found}};
  return r;
}

SuiteResult suite_logic(const SuiteOptions& o) {
  Collector sink;
  const auto corpus = load(o, 5, 1);
  const int max_len = 3;
  // Per length: largest entry of A^l and the realized totals tr(A^l).
  std::vector<long> max_entry(max_len + 1, 0);
  std::vector<std::set<long>> traces(max_len + 1);
  std::vector<std::vector<IntMatrix>> powers(corpus.size());
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const IntMatrix a = corpus[gi].graph.adjacency();
    IntMatrix p = a;
    powers[gi].push_back(identity(a.rows()));
    for (int l = 1; l <= max_len; ++l) {
      powers[gi].push_back(p);
      for (Index u = 0; u < p.rows(); ++u) {
        for (Index v = 0; v < p.cols(); ++v) max_entry[l] = std::max(max_entry[l], p(u, v).convert_to<long>());
      }
      traces[l].insert(p.trace().convert_to<long>());
      p = (p * a).eval();
    }
  }
  CountingFormulaFactory factory(o.formula_budget);
  std::vector<std::tuple<int, int, NodeId>> walk_roots, closed_roots, distance_roots;
  for (int l = 1; l <= max_len; ++l) {
    for (int r = 0; r <= max_entry[l]; ++r) walk_roots.emplace_back(l, r, factory.walk(l, r, factory.x(), factory.y()));
    for (long r : traces[l]) closed_roots.emplace_back(l, static_cast<int>(r), factory.closed_walks(l, static_cast<int>(r)));
  }
  const int max_distance = 5;
  for (int i = 0; i <= max_distance; ++i) distance_roots.emplace_back(i, 0, factory.distance(i, factory.x(), factory.y()));
  std::size_t wide = 0;
  for (const auto* roots : {&walk_roots, &closed_roots, &distance_roots}) {
    for (const auto& [a, b, root] : *roots) {
      (void)a;
      (void)b;
      if (count_variables(factory.formula(root)) > 3) ++wide;
    }
  }
  if (wide) sink.add("", "", std::to_string(wide) + " built formulas use more than 3 variables");
  std::atomic<std::size_t> checks{0};
  const std::shared_ptr<const FormulaStore> store = factory.shared_store();
  parallel_for(corpus.size(), o.jobs, [&](std::size_t gi) {
    const Graph& g = corpus[gi].graph;
    const int n = g.order();
    Evaluator ev(g, store);
    const auto dist = all_pairs_distances(g);
    std::size_t local = 0;
    for (const auto& [l, r, root] : walk_roots) {
      const Formula f = factory.formula(root);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          const bool holds = ev.evaluate(f, {{"x", u}, {"y", v}});
          if (holds != (powers[gi][static_cast<std::size_t>(l)](u, v) == r)) {
            sink.add(corpus[gi].graph6, "", "psi_" + std::to_string(l) + "^" + std::to_string(r) + " wrong at (" +
                                                std::to_string(u) + "," + std::to_string(v) + ")");
          }
          ++local;
        }
      }
    }
    for (const auto& [l, r, root] : closed_roots) {
      const bool holds = ev.evaluate(factory.formula(root));
      if (holds != (powers[gi][static_cast<std::size_t>(l)].trace() == r)) {
        sink.add(corpus[gi].graph6, "", "phi_" + std::to_string(l) + "^" + std::to_string(r) + " wrong");
      }
      ++local;
    }
    for (const auto& [i, unused, root] : distance_roots) {
      (void)unused;
      const Formula f = factory.formula(root);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          const bool holds = ev.evaluate(f, {{"x", u}, {"y", v}});
          if (holds != (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == i)) {
            sink.add(corpus[gi].graph6, "", "delta_" + std::to_string(i) + " wrong at (" + std::to_string(u) + "," +
                                                std::to_string(v) + ")");
          }
          ++local;
        }
      }
    }
    checks += local;
  });
  SuiteResult r{"logic", corpus_label(o, 5, 1), checks.load(), sink.take()};
  r.details = {{"walk_formulas", walk_roots.size()},
               {"closed_walk_sentences", closed_roots.size()},
               {"distance_formulas", distance_roots.size()},
               {"dag_nodes", factory.builder().store().size()}};
  return r;
}

SuiteResult suite_pebble(const SuiteOptions& o) {
  Collector sink;
  const auto corpus = load(o, 6, 1);
  const auto pairs = pairs_within<std::pair<int, ColorHistogram>>(corpus, wl1_key);
  std::atomic<std::size_t> games{0};
  parallel_for(pairs.size(), o.jobs, [&](std::size_t p) {
    const auto& g = corpus[pairs[p].first];
    const auto& h = corpus[pairs[p].second];
    if (c2_equivalent(g.graph, h.graph)) {
      ++games;
      if (pebble_game(g.graph, h.graph, 2).winner != Winner::Duplicator) {
        sink.add(g.graph6, h.graph6, "C2-equivalent but Spoiler wins with 2 pebbles");
      }
    }
    if (c3_equivalent(g.graph, h.graph)) {
      ++games;
      if (pebble_game(g.graph, h.graph, 3).winner != Winner::Duplicator) {
        sink.add(g.graph6, h.graph6, "C3-equivalent but Spoiler wins with 3 pebbles");
      }
    }
  });
  // Relabeled copies: Duplicator wins for every k <= n, within the state
  // budget used here.
  parallel_for(corpus.size(), o.jobs, [&](std::size_t i) {
    const Graph& g = corpus[i].graph;
    const Graph h = random_permutation(g.order(), mix_seed(o.seed, i)).apply(g);
    for (int k = 1; k <= std::min(g.order(), g.order() <= 5 ? 3 : 2); ++k) {
      ++games;
      if (pebble_game(g, h, k).winner != Winner::Duplicator) {
        sink.add(corpus[i].graph6, write_graph6(h), "Spoiler wins on isomorphic graphs with k = " + std::to_string(k));
      }
    }
  });
  SuiteResult r{"pebble", corpus_label(o, 6, 1), pairs.size() + corpus.size(), sink.take()};
  r.details = {{"games", games.load()}};
  return r;
}

SuiteResult suite_algebra(const SuiteOptions& o) {
  Collector sink;
  const auto corpus = load(o, 6, 0);
  const IntPoly minus_x_minus_1 = make_int_poly({-1, -1});
  parallel_for(corpus.size(), o.jobs, [&](std::size_t i) {
    const Graph& g = corpus[i].graph;
    const auto& id = corpus[i].graph6;
    const IntMatrix a = g.adjacency();
    const IntPoly phi = char_poly(a);
    if (!phi.evaluate(a).isZero()) sink.add(id, "", "Cayley-Hamilton fails");
    const IntPoly mu = min_poly(a);
    if (!phi.divmod(mu).second.is_zero()) sink.add(id, "", "minimal polynomial does not divide the characteristic polynomial");
    const IntPoly at0 = gen_char_poly_at(g, 0);
    const IntPoly slope = gen_char_poly_at(g, 1) - at0;
    for (int y : {-1, 1, 2, 3}) {
      if (gen_char_poly_at(g, y) != at0 + IntPoly::constant(Integer(y)) * slope) {
        sink.add(id, "", "Phi(x, y) is not affine in y at y = " + std::to_string(y));
      }
    }
    const Integer sign = g.order() % 2 ? Integer(-1) : Integer(1);
    if (char_poly(complement(g).adjacency()) != sign * gen_char_poly_at(g, -1).compose(minus_x_minus_1)) {
      sink.add(id, "", "complement identity fails");
    }
    try {
      is_quotient_polynomial(g);
    } catch (const std::logic_error& e) {
      sink.add(id, "", e.what());
    }
  });
  SuiteResult r{"algebra", corpus_label(o, 6, 0), corpus.size(), sink.take()};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thm1", "thm6", "lem2", "cor1", "cor2", "thm5",
                                                 "thm4", "fig1", "logic", "pebble", "algebra"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "thm1") return suite_thm1(options);
  if (name == "thm6") return suite_walks(options, false);
  if (name == "lem2") return suite_walks(options, true);
  if (name == "cor1") return suite_cor1(options);
  if (name == "cor2") return suite_cor2(options);
  if (name == "thm5") return suite_thm5(options);
  if (name == "thm4") return suite_thm4(options);
  if (name == "fig1") return suite_fig1(options);
  if (name == "logic") return suite_logic(options);
  if (name == "pebble") return suite_pebble(options);
  if (name == "algebra") return suite_algebra(options);
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace gspec
