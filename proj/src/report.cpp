#include "gspec/report.hpp"

#include "gspec/algebraic.hpp"
#include "gspec/graph6.hpp"
#include "gspec/isomorphism.hpp"
#include "gspec/spectra.hpp"
#include "gspec/wl.hpp"

namespace gspec {

using json = nlohmann::json;

namespace {

json histogram_json(const ColorHistogram& h) {
  json out = json::array();
  for (const auto& [color, count] : h) out.push_back({color, count});
  return out;
}

json permutation_json(const std::optional<Permutation>& p) {
  return p ? json(p->map()) : json(nullptr);
}

// Row-major arrays of decimal strings.
json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json with_schema(json body) {
  body["schema"] = kSchemaVersion;
  return body;
}

}  // namespace

json structure_report(const Graph& g) {
  json out;
  out["connected"] = g.is_connected();
  out["regular"] = g.is_regular();
  out["degree"] = g.regular_degree() ? json(*g.regular_degree()) : json(nullptr);
  if (const auto srg = srg_parameters(g)) {
    out["srg"] = {{"n", srg->n}, {"k", srg->k}, {"a", srg->a}, {"c", srg->c}};
  } else {
    out["srg"] = nullptr;
  }
  if (g.order() == 0) {
    out["drg"] = {{"error", "graph has no vertices"}};
  } else {
    try {
      const auto drg = drg_intersection_array(g);
      if (drg.array) {
        out["drg"] = {{"array", drg.array->str()}};
      } else {
        const auto& w = *drg.violation;
        out["drg"] = {{"violation",
                       {{"which", std::string(1, w.which)},
                        {"i", w.i},
                        {"first_pair", {w.u, w.v}},
                        {"second_pair", {w.u2, w.v2}},
                        {"counts", {w.count, w.count2}}}}};
      }
    } catch (const DisconnectedGraphError& e) {
      out["drg"] = {{"error", e.what()}};
    }
  }
  const auto qp = is_quotient_polynomial(g);
  out["quotient_polynomial"] = {{"holds", qp.holds}, {"m", qp.classes}, {"d_plus_one", qp.d_plus_one}};
  out["coherent_closure_classes"] = coherent_closure_basis(g).size();
  return out;
}

json analyze_report(const Graph& g) {
  json out;
  out["graph6"] = write_graph6(g);
  out["n"] = g.order();
  out["edges"] = g.edge_count();
  const auto spec = generalized_spectrum(g);
  out["char_poly"] = spec.phi.str();
  out["complement_char_poly"] = spec.phi_complement.str();
  out["regular"] = g.is_regular();
  out["controllable"] = g.order() > 0 && is_controllable(g);
  const auto c1 = color_refinement(g);
  out["wl1"] = {{"colors", c1.num_colors()}, {"rounds", c1.rounds}, {"histogram", histogram_json(c1.histogram)}};
  const auto c2 = wl2_refinement(g);
  out["wl2"] = {{"colors", c2.num_colors()}, {"rounds", c2.rounds}, {"histogram", histogram_json(c2.histogram)}};
  out["structure"] = structure_report(g);
  return with_schema(out);
}

json compare_report(const Graph& g, const Graph& h) {
  json out;
  out["first"] = write_graph6(g);
  out["second"] = write_graph6(h);
  const auto iso = g == h ? std::optional<Permutation>(Permutation::identity(g.order())) : are_isomorphic(g, h);
  out["isomorphic"] = iso.has_value();
  out["isomorphism"] = permutation_json(iso);
  out["c2"] = c2_equivalent(g, h);
  out["c3"] = c3_equivalent(g, h);
  out["cospectral"] = g.order() == h.order() && cospectral(g, h);
  out["generalized_cospectral"] = g.order() == h.order() && generalized_cospectral(g, h);
  out["walk_equivalent"] = walk_equivalent(g, h);
  const bool g_ctrl = g.order() > 0 && is_controllable(g);
  const bool h_ctrl = h.order() > 0 && is_controllable(h);
  out["controllable"] = {g_ctrl, h_ctrl};
  json ctrl;
  if (g.order() != h.order() || g.order() == 0) {
    ctrl = {{"applicable", false}, {"reason", "orders differ or graphs are empty"}};
  } else if (!g_ctrl || !h_ctrl) {
    ctrl = {{"applicable", false}, {"reason", "not both controllable"}};
  } else {
    const auto r = controllable_iso(g, h);
    ctrl = {{"applicable", true},
            {"q_is_permutation_matrix", r.q_is_permutation_matrix},
            {"permutation", permutation_json(r.permutation)}};
    if (!r.q_is_permutation_matrix) ctrl["q"] = matrix_json(r.q);
  }
  out["controllable_iso"] = ctrl;
  return with_schema(out);
}

json closure_report(const Graph& g, bool with_matrices) {
  const auto basis = coherent_closure_basis(g);
  json classes = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    json c = {{"color", i}, {"diagonal", static_cast<bool>(basis.diagonal[i])}, {"size", basis.sizes[i]}};
    if (with_matrices) {
      json rows = json::array();
      const auto& m = basis.matrices[i];
      for (Index r = 0; r < m.rows(); ++r) {
        std::string row;
        for (Index col = 0; col < m.cols(); ++col) row += m(r, col) == 0 ? '0' : '1';
        rows.push_back(row);
      }
      c["matrix"] = rows;
    }
    classes.push_back(c);
  }
  return with_schema({{"graph6", write_graph6(g)}, {"classes", basis.size()}, {"basis", classes}});
}

json equivalence_report(const Graph& g, const Graph& h, int logic_k) {
  const auto v = logic_k == 2 ? c2_equivalence(g, h) : c3_equivalence(g, h);
  return with_schema({{"logic", logic_k == 2 ? "c2" : "c3"},
                      {"equivalent", v.equivalent},
                      {"first", write_graph6(g)},
                      {"second", write_graph6(h)},
                      {"first_histogram", histogram_json(v.left)},
                      {"second_histogram", histogram_json(v.right)}});
}

json pebble_report(const Graph& g, const Graph& h, const PebbleResult& result) {
  json line = json::array();
  for (const auto& m : result.spoiler_line) {
    line.push_back({{"pebble", m.pebble},
                    {"side", m.side},
                    {"spoiler_vertex", m.spoiler_vertex},
                    {"duplicator_vertex", m.duplicator_vertex ? json(*m.duplicator_vertex) : json(nullptr)}});
  }
  return with_schema({{"first", write_graph6(g)},
                      {"second", write_graph6(h)},
                      {"winner", to_string(result.winner)},
                      {"positions", result.positions},
                      {"rounds", result.rounds},
                      {"spoiler_line", line}});
}

std::vector<json> suite_report_lines(const SuiteResult& r) {
  std::vector<json> lines;
  for (const auto& v : r.violations) {
    lines.push_back(with_schema(
        {{"type", "violation"}, {"suite", r.suite}, {"first", v.first}, {"second", v.second}, {"detail", v.detail}}));
  }
  lines.push_back(with_schema({{"type", "summary"},
                               {"suite", r.suite},
                               {"corpus", r.corpus},
                               {"examined", r.examined},
                               {"violations", r.violations.size()},
                               {"passed", r.passed()},
                               {"details", r.details}}));
  return lines;
}

namespace {

void render(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const bool nested = (it->is_object() && !it->empty()) ||
                        (it->is_array() && !it->empty() && (it->front().is_object()));
    out += pad;
    if (j.is_object()) out += it.key() + ":";
    if (nested) {
      out += "\n";
      render(*it, indent + 1, out);
    } else {
      out += (j.is_object() ? " " : "- ") + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
    }
  }
}

}  // namespace

std::string pretty_text(const json& j) {
  std::string out;
  if (j.is_object() || j.is_array()) {
    render(j, 0, out);
  } else {
    out = (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
  return out;
}

}  // namespace gspec
