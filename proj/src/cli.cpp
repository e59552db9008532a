#include "gspec/cli.hpp"

#include "gspec/enumerate.hpp"
#include "gspec/errors.hpp"
#include "gspec/evaluate.hpp"
#include "gspec/formula_builders.hpp"
#include "gspec/formula_parser.hpp"
#include "gspec/generators.hpp"
#include "gspec/graph6.hpp"
#include "gspec/harness.hpp"
#include "gspec/report.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gspec {

using json = nlohmann::json;

namespace {

class GraphReader {
 public:
  explicit GraphReader(std::istream& in) : in_(in) {}

  // "-" reads the next record from stdin, "gen:SPEC" runs a generator, an
  // existing path reads its first record, anything else is a literal.
  Graph read(const std::string& arg) {
    if (arg == "-") {
      std::string line;
      while (std::getline(in_, line)) {
        ++stdin_line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return parse(line, "stdin:" + std::to_string(stdin_line_));
      }
      throw PreconditionError("stdin: no graph6 record");
    }
    if (arg.rfind("gen:", 0) == 0) return generate(std::string_view(arg).substr(4));
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
      std::ifstream file(arg);
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(file, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return parse(line, arg + ":" + std::to_string(lineno));
      }
      throw PreconditionError(arg + ": no graph6 record");
    }
    return parse(arg, "argument");
  }

 private:
  static Graph parse(const std::string& text, const std::string& where) {
    try {
      return parse_graph6(text);
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" at offset")),
                       e.position());
    }
  }

  std::istream& in_;
  std::size_t stdin_line_ = 0;
};

std::string read_text_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream file(arg.substr(1));
  if (!file) throw PreconditionError("cannot open '" + arg.substr(1) + "'");
  std::stringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void emit(std::ostream& out, const json& j, bool pretty) {
  if (pretty) {
    out << pretty_text(j);
  } else {
    out << j.dump() << "\n";
  }
}

Assignment parse_assignments(const std::vector<std::string>& items) {
  Assignment env;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw PreconditionError("--assign expects var=vertex, got '" + item + "'");
    try {
      std::size_t used = 0;
      const int v = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
      env[item.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw PreconditionError("--assign expects var=vertex, got '" + item + "'");
    }
  }
  return env;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact spectral, Weisfeiler-Leman and counting-logic tools for small graphs", "gspec"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  std::string g_arg, h_arg;
  auto* analyze = app.add_subcommand("analyze", "polynomials, refinement histograms and structure of one graph");
  analyze->add_option("graph", g_arg, "graph6 literal, file, '-' or gen:SPEC")->required();

  auto* compare = app.add_subcommand("compare", "all pairwise verdicts for two graphs");
  compare->add_option("first", g_arg)->required();
  compare->add_option("second", h_arg)->required();

  std::string logic = "c2";
  auto* equiv = app.add_subcommand("equiv", "C2 or C3 equivalence with histograms");
  equiv->add_option("--logic", logic)->check(CLI::IsMember({"c2", "c3"}));
  equiv->add_option("first", g_arg)->required();
  equiv->add_option("second", h_arg)->required();

  auto* structure = app.add_subcommand("structure", "regularity, SRG/DRG detection and quotient-polynomial verdict");
  structure->add_option("graph", g_arg)->required();

  bool with_matrices = false;
  auto* closure = app.add_subcommand("closure", "coherent closure 01-basis");
  closure->add_option("graph", g_arg)->required();
  closure->add_flag("--matrices", with_matrices, "print every basis matrix");

  std::string formula_arg;
  std::vector<std::string> assignments;
  bool witnesses = false;
  auto* eval = app.add_subcommand("eval", "model-check a formula");
  eval->add_option("--formula", formula_arg, "formula text or @file")->required();
  eval->add_option("--graph", g_arg)->required();
  eval->add_option("--assign", assignments, "bindings var=vertex for free variables");
  eval->add_flag("--witnesses", witnesses, "count witnesses of the top-level quantifier");

  std::string family;
  int len = 1, count = 0, index = 0;
  std::string array_text;
  bool stats = false;
  std::size_t budget = kDefaultNodeBudget;
  auto* formula = app.add_subcommand("formula", "print a built formula (psi, phi, delta, drg)");
  formula->add_option("family", family)->required()->check(CLI::IsMember({"psi", "phi", "delta", "drg"}));
  formula->add_option("--len", len, "walk length");
  formula->add_option("--count", count, "walk count");
  formula->add_option("--i", index, "distance");
  formula->add_option("--array", array_text, "intersection array such as {3,2,1;1,2,3}");
  formula->add_flag("--stats", stats, "print size statistics instead of the text");
  formula->add_option("--budget", budget, "node budget");

  int k = 2;
  auto* pebble = app.add_subcommand("pebble", "winner of the k-pebble game");
  pebble->add_option("--k", k)->check(CLI::PositiveNumber);
  pebble->add_option("first", g_arg)->required();
  pebble->add_option("second", h_arg)->required();

  std::string spec;
  auto* gen = app.add_subcommand("generate", "graph6 of a named family member");
  gen->add_option("spec", spec, "e.g. paley:13, cycle:6, petersen")->required();

  int order = 0;
  auto* enumerate = app.add_subcommand("enumerate", "graph6 of one graph per isomorphism class");
  enumerate->add_option("--n", order)->required()->check(CLI::Range(0, kMaxEnumerationOrder));

  std::string suite;
  SuiteOptions options;
  int max_n = 0;
  std::string corpus_file;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  auto* max_n_opt = verify->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
  auto* file_opt = verify->add_option("--file", corpus_file, "graph6 corpus, one record per line");
  verify->add_option("--jobs", options.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--seed", options.seed, "seed for random relabelings");
  verify->add_option("--budget", options.formula_budget, "node budget for the logic suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    GraphReader reader(in);
    if (analyze->parsed()) {
      emit(out, analyze_report(reader.read(g_arg)), pretty);
    } else if (compare->parsed()) {
      const Graph g = reader.read(g_arg);
      emit(out, compare_report(g, reader.read(h_arg)), pretty);
    } else if (equiv->parsed()) {
      const Graph g = reader.read(g_arg);
      emit(out, equivalence_report(g, reader.read(h_arg), logic == "c2" ? 2 : 3), pretty);
    } else if (structure->parsed()) {
      json j = structure_report(reader.read(g_arg));
      j["schema"] = kSchemaVersion;
      emit(out, j, pretty);
    } else if (closure->parsed()) {
      emit(out, closure_report(reader.read(g_arg), with_matrices), pretty);
    } else if (eval->parsed()) {
      const Formula f = parse_formula(read_text_arg(formula_arg));
      const Graph g = reader.read(g_arg);
      const Assignment env = parse_assignments(assignments);
      Evaluator ev(g, f.shared_store());
      json j = {{"schema", kSchemaVersion}, {"holds", ev.evaluate(f, env)}, {"free_variables", f.free_variables()}};
      if (witnesses) {
        const auto w = ev.top_level_witnesses(f, env);
        j["witnesses"] = w ? json(*w) : json(nullptr);
      }
      if (pretty) {
        out << (j["holds"].get<bool>() ? "true" : "false") << "\n";
        if (witnesses) out << "witnesses: " << j["witnesses"].dump() << "\n";
      } else {
        out << j.dump() << "\n";
      }
    } else if (formula->parsed()) {
      CountingFormulaFactory factory(budget);
      NodeId root;
      if (family == "psi") {
        root = factory.walk(len, count, factory.x(), factory.y());
      } else if (family == "phi") {
        root = factory.closed_walks(len, count);
      } else if (family == "delta") {
        root = factory.distance(index, factory.x(), factory.y());
      } else {
        root = factory.drg_sentence(parse_intersection_array(array_text));
      }
      const Formula f = factory.formula(root);
      if (stats) {
        emit(out,
             {{"schema", kSchemaVersion},
              {"family", family},
              {"dag_nodes", f.dag_size()},
              {"variables", count_variables(f)},
              {"free_variables", f.free_variables()}},
             pretty);
      } else {
        out << to_string(f) << "\n";
      }
    } else if (pebble->parsed()) {
      const Graph g = reader.read(g_arg);
      const Graph h = reader.read(h_arg);
      const auto result = pebble_game(g, h, k);
      if (pretty) {
        out << to_string(result.winner) << "\n";
        for (const auto& m : result.spoiler_line) {
          out << "pebble " << m.pebble << " on vertex " << m.spoiler_vertex << " of graph " << (m.side ? "2" : "1")
              << ", answer " << (m.duplicator_vertex ? std::to_string(*m.duplicator_vertex) : "none") << "\n";
        }
      } else {
        out << pebble_report(g, h, result).dump() << "\n";
      }
    } else if (gen->parsed()) {
      out << write_graph6(generate(spec)) << "\n";
    } else if (enumerate->parsed()) {
      for (const Graph& g : enumerate_nonisomorphic(order)) out << write_graph6(g) << "\n";
    } else if (verify->parsed()) {
      if (*max_n_opt) options.max_n = max_n;
      if (*file_opt) options.file = corpus_file;
      const SuiteResult result = run_suite(suite, options);
      const auto lines = suite_report_lines(result);
      if (pretty) {
        out << result.suite << ": " << (result.passed() ? "PASS" : "FAIL") << " (" << result.examined
            << " examined, " << result.violations.size() << " violations; " << result.corpus << ")\n";
        for (const auto& v : result.violations) out << "  " << v.first << " " << v.second << ": " << v.detail << "\n";
        out << pretty_text(result.details);
      } else {
        for (const auto& line : lines) out << line.dump() << "\n";
      }
      return result.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace gspec
