// yamhall: command-line front end.
//
//   yamhall expand --poly hl|mac|r --basis schur|fundamental --diagram D [--descents G]
//   yamhall words --shape L [--diagram D] [--no-jam] [--inv0]
//   yamhall graph --diagram D [--inv0 | --descents G] [--dot FILE] [--report]
//   yamhall realizable --diagram D --descents G
//   yamhall leading --diagram D --descents G
//   yamhall check --suite NAME [--max-n K] [--samples S] [--seed R]
//
// Exit status: 0 success, 1 failed check suite, 2 invalid input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "yamhall/checks.hpp"
#include "yamhall/io.hpp"
#include "yamhall/yamhall.hpp"

namespace {

using nlohmann::json;
using namespace yamhall;

struct Options {
  std::string diagram, descents, shape, poly = "hl", basis = "schur", dot, suite;
  bool no_jam = false, inv0 = false, report = false, force = false;
  std::optional<int> max_n, samples;
  std::uint64_t seed = checks::SuiteOptions{}.seed;
};

Bounds bounds_for(const Options& o) {
  Bounds b = Bounds::from_env();
  b.force = o.force;
  return b;
}

Diagram require_diagram(const Options& o) {
  if (o.diagram.empty()) throw InvalidInput("--diagram is required");
  return parse_diagram_spec(o.diagram);
}

Diagram require_descents(const Options& o) {
  if (o.descents.empty()) throw InvalidInput("--descents is required");
  return parse_diagram_spec(o.descents);
}

int run_expand(const Options& o) {
  const Diagram d = require_diagram(o);
  const Bounds b = bounds_for(o);
  if (o.basis != "schur" && o.basis != "fundamental") throw InvalidInput("--basis must be schur or fundamental");
  const bool schur = o.basis == "schur";
  json out;
  if (o.poly == "hl") {
    out = schur ? to_json(hl_schur(d, b)) : to_json(hall_littlewood_F(d, b));
  } else if (o.poly == "mac") {
    const auto f = macdonald_F(d, b);
    out = schur ? to_json(schur_from_F(f)) : to_json(f);
  } else if (o.poly == "r") {
    const Diagram g = require_descents(o);
    out = schur ? to_json(r_schur(g, d, b)) : to_json(r_polynomial_F(g, d, b));
  } else {
    throw InvalidInput("--poly must be hl, mac or r");
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_words(const Options& o) {
  if (o.shape.empty()) throw InvalidInput("--shape is required");
  const Partition lambda = parse_partition(o.shape);
  std::optional<Diagram> d;
  if (!o.diagram.empty()) d = parse_diagram_spec(o.diagram);
  bounds_for(o).check_fill(lambda.size(), "words");
  json out = json::array();
  for (const auto& w : generate_yam(lambda, d, {.no_jam = o.no_jam, .inv_zero = o.inv0})) out.push_back(format_word(w));
  std::cout << out.dump() << "\n";
  return 0;
}

int run_graph(const Options& o) {
  const Diagram d = require_diagram(o);
  if (o.inv0 && !o.descents.empty()) throw InvalidInput("--inv0 and --descents are exclusive");
  VertexFilter filter = VertexFilter::all();
  if (o.inv0) filter = VertexFilter::inv_zero();
  if (!o.descents.empty()) filter = VertexFilter::inv_zero_descents(parse_diagram_spec(o.descents));
  if (!o.descents.empty() && !d.contains(filter.gamma))
    throw InvalidInput("descent set is not contained in the diagram");
  const auto g = assaf_graph(d, filter, bounds_for(o));
  if (!o.dot.empty()) {
    std::ofstream f(o.dot);
    if (!f) throw InvalidInput("cannot write " + o.dot);
    f << to_dot(g);
  }
  if (o.report) {
    json out = json::array();
    for (const auto& c : component_schur_report(g)) out.push_back(to_json(c));
    std::cout << out.dump() << "\n";
  } else if (o.dot.empty()) {
    std::cout << json{{"vertices", g.vertex_count()}, {"components", components(g).size()}}.dump() << "\n";
  }
  return 0;
}

int run_realizable(const Options& o) {
  const Diagram d = require_diagram(o);
  std::cout << json{{"realizable", is_realizable(require_descents(o), d)}}.dump() << "\n";
  return 0;
}

int run_leading(const Options& o) {
  const Diagram d = require_diagram(o);
  const Diagram g = require_descents(o);
  std::cout << json{{"word", format_word(leading_yam_word(g, d))}, {"content", leading_term(g, d).parts()}}.dump()
            << "\n";
  return 0;
}

int run_check(const Options& o) {
  const auto* suite = checks::find_suite(o.suite);
  if (!suite) throw InvalidInput("unknown suite '" + o.suite + "'");
  checks::SuiteOptions so;
  so.max_n = o.max_n;
  so.samples = o.samples;
  so.seed = o.seed;
  const auto r = suite->run(so);
  std::cout << checks::summary_line(r) << "\n";
  for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  return r.passed() || !r.gating ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall-Littlewood and Macdonald polynomials of diagrams via Yamanouchi words"};
  app.require_subcommand(1);
  Options o;

  auto add_diagram = [&](CLI::App* c) { c->add_option("--diagram", o.diagram, "diagram, p:4,3,2 or c:0,0;1,0"); };
  auto add_descents = [&](CLI::App* c) { c->add_option("--descents", o.descents, "descent set, same grammar"); };
  auto add_force = [&](CLI::App* c) { c->add_flag("--force", o.force, "ignore the size bounds"); };

  auto* expand = app.add_subcommand("expand", "Schur or fundamental expansion");
  add_diagram(expand);
  add_descents(expand);
  add_force(expand);
  expand->add_option("--poly", o.poly, "hl, mac or r");
  expand->add_option("--basis", o.basis, "schur or fundamental");

  auto* words = app.add_subcommand("words", "Yamanouchi words of a content");
  words->add_option("--shape", o.shape, "content partition, e.g. 2,2,2");
  add_diagram(words);
  add_force(words);
  words->add_flag("--no-jam", o.no_jam, "drop words that jam the diagram");
  words->add_flag("--inv0", o.inv0, "keep words with inv = 0");

  auto* graph = app.add_subcommand("graph", "Assaf graph of a diagram");
  add_diagram(graph);
  add_descents(graph);
  add_force(graph);
  graph->add_flag("--inv0", o.inv0, "restrict to inv = 0");
  graph->add_option("--dot", o.dot, "write DOT to this file");
  graph->add_flag("--report", o.report, "per-component Schur report as JSON");

  auto* realizable = app.add_subcommand("realizable", "is the descent set realizable");
  add_diagram(realizable);
  add_descents(realizable);

  auto* leading = app.add_subcommand("leading", "leading Yamanouchi word and its content");
  add_diagram(leading);
  add_descents(leading);

  auto* check = app.add_subcommand("check", "run a named verification suite");
  check->add_option("--suite", o.suite, "suite name or id")->required();
  check->add_option("--max-n", o.max_n, "largest diagram size");
  check->add_option("--samples", o.samples, "number of sampled diagrams or cases");
  check->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*expand) return run_expand(o);
    if (*words) return run_words(o);
    if (*graph) return run_graph(o);
    if (*realizable) return run_realizable(o);
    if (*leading) return run_leading(o);
    if (*check) return run_check(o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << " (use --force or YAMHALL_MAX_N)\n";
    return 2;
  } catch (const NotInSchurSpan& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
