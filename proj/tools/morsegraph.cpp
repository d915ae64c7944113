#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "morsegraph/morsegraph.hpp"

namespace {

using namespace morsegraph;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNotEquivalent = 3;
constexpr int kExitInconsistentDiagram = 4;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << content;
}

MorseFunction load_function(const std::string& graph_path,
                            const std::string& function_path) {
  Graph g = parse_graph(read_file(graph_path));
  return MorseFunction::validate(g, parse_function_values(read_file(function_path)));
}

int cmd_validate(const std::string& graph_path, const std::string& function_path,
                 const std::string& out_path) {
  MorseFunction f = load_function(graph_path, function_path);
  MorseInequalityReport report = check_morse_inequalities(f);
  nlohmann::ordered_json j;
  j["simplices"] = f.graph().simplex_count();
  j["betti"] = {report.b0, report.b1};
  j["critical_vertices"] = report.m0;
  j["critical_edges"] = report.m1;
  j["criticals"] = nlohmann::ordered_json::array();
  for (const auto& [simplex, value] : f.criticals())
    j["criticals"].push_back({{"simplex", simplex.str()}, {"value", value}});
  j["regular_pairs"] = nlohmann::ordered_json::array();
  for (const auto& [vertex, edge] : f.regular_pairs().pairs)
    j["regular_pairs"].push_back(
        {{"vertex", std::to_string(vertex)},
         {"edge", Simplex::edge(edge).str()},
         {"value", f.value(Simplex::edge(edge)).str()}});
  write_output(out_path, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_persist(const std::string& graph_path, const std::string& function_path,
                bool oracle, const std::string& out_path) {
  MorseFunction f = load_function(graph_path, function_path);
  PersistenceDiagram d =
      oracle ? compute_diagram_oracle(f) : compute_diagram_fast(f);
  write_output(out_path, serialize_diagram(d));
  return kExitOk;
}

int cmd_realize(const std::string& tree_path, const std::string& diagram_path,
                const std::string& out_path, std::optional<uint64_t> seed) {
  Graph t = parse_graph(read_file(tree_path));
  PersistenceDiagram d = parse_diagram(read_file(diagram_path));
  RealizeOptions options;
  options.randomize_seed = seed;
  MorseFunction f = realize(t, d, options);
  write_output(out_path, serialize_function(f));
  return kExitOk;
}

int cmd_count(long long simplices, int pairs, std::optional<int> betti1) {
  BigInt result = betti1 ? upper_bound_general({simplices, *betti1, pairs})
                         : upper_bound_tree(simplices, pairs);
  std::cout << result.get_str() << "\n";
  return kExitOk;
}

int cmd_equiv(const std::string& relation, const std::string& graph_path,
              const std::string& f1_path, const std::string& f2_path) {
  Graph g = parse_graph(read_file(graph_path));
  MorseFunction f1 =
      MorseFunction::validate(g, parse_function_values(read_file(f1_path)));
  MorseFunction f2 =
      MorseFunction::validate(g, parse_function_values(read_file(f2_path)));
  bool equivalent;
  if (relation == "persistence")
    equivalent = persistence_equivalent(f1, f2);
  else if (relation == "forman")
    equivalent = forman_equivalent(f1, f2);
  else if (relation == "homological")
    equivalent = homologically_equivalent(f1, f2);
  else if (relation == "graph")
    equivalent = graph_equivalent(f1, f2);
  else
    throw InputError("unknown relation " + relation);
  std::cout << (equivalent ? "equivalent" : "not equivalent") << "\n";
  return equivalent ? kExitOk : kExitNotEquivalent;
}

int cmd_enumerate(const std::string& tree_path, std::optional<int> pairs,
                  bool check_roundtrip) {
  Graph t = parse_graph(read_file(tree_path));
  if (!is_tree(t)) throw RealizationError("enumeration requires a tree");
  long long n = static_cast<long long>(t.simplex_count());
  std::vector<int> ks;
  if (pairs)
    ks.push_back(*pairs);
  else
    for (int k = 0; 2ll * k + 1 <= n; ++k) ks.push_back(k);
  long long total = 0;
  long long verified = 0;
  for (int k : ks) {
    for_each_consistent_diagram(n, k, [&](const PersistenceDiagram& d) {
      std::cout << serialize_diagram(d, -1);
      ++total;
      if (check_roundtrip) {
        PersistenceDiagram back = compute_diagram_fast(realize(t, d));
        if (!diagram_equal(back, d))
          throw std::runtime_error("realization failed to reproduce diagram " +
                                   serialize_diagram(d, -1));
        ++verified;
      }
    });
  }
  if (check_roundtrip)
    std::cerr << "roundtrip verified for " << verified << " of " << total
              << " diagrams\n";
  return kExitOk;
}

int cmd_achievable(const std::string& graph_path) {
  Graph g = parse_graph(read_file(graph_path));
  std::vector<PersistenceDiagram> diagrams = enumerate_achievable_diagrams(g);
  for (const PersistenceDiagram& d : diagrams)
    std::cout << serialize_diagram(d, -1);
  std::cout << "count: " << diagrams.size() << "\n";
  return kExitOk;
}

int cmd_render(const std::string& diagram_path, const std::string& format,
               int width, bool grid, const std::string& out_path) {
  PersistenceDiagram d = parse_diagram(read_file(diagram_path));
  RenderSpec spec;
  if (format == "ascii")
    spec.format = BarcodeFormat::Ascii;
  else if (format == "svg")
    spec.format = BarcodeFormat::Svg;
  else
    throw InputError("unknown format " + format);
  spec.width = width;
  spec.show_grid = grid;
  write_output(out_path, render_barcode(d, spec));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Persistence diagrams of flat discrete Morse functions on graphs:\n"
      "validation, computation, realization on trees, enumeration, and\n"
      "barcode rendering."};
  app.require_subcommand(1);

  std::string graph_path, function_path, diagram_path, out_path;
  std::string f1_path, f2_path;
  std::string relation = "persistence";
  std::string format = "ascii";
  bool oracle = false;
  bool check_roundtrip = false;
  bool grid = false;
  int width = 100;
  long long simplices = 0;
  int pairs = 0;
  std::optional<int> betti1;
  std::optional<int> pairs_opt;
  std::optional<uint64_t> seed;

  CLI::App* validate = app.add_subcommand(
      "validate", "Check a function file against every axiom");
  validate->add_option("-g,--graph", graph_path, "Graph JSON file")->required();
  validate->add_option("-f,--function", function_path, "Function JSON file")
      ->required();
  validate->add_option("--out", out_path, "Report destination (default stdout)");

  CLI::App* persist = app.add_subcommand(
      "persist", "Compute the persistence diagram of a function");
  persist->add_option("-g,--graph", graph_path, "Graph JSON file")->required();
  persist->add_option("-f,--function", function_path, "Function JSON file")
      ->required();
  persist->add_flag("--oracle", oracle,
                    "Use the definition-level persistent Betti computation");
  persist->add_option("--out", out_path, "Diagram destination (default stdout)");

  CLI::App* realize_cmd = app.add_subcommand(
      "realize", "Build a function on a tree realizing a diagram");
  realize_cmd->add_option("-g,--graph", graph_path, "Tree JSON file")
      ->required();
  realize_cmd->add_option("-d,--diagram", diagram_path, "Diagram JSON file")
      ->required();
  realize_cmd->add_option("-o,--out", out_path,
                          "Function destination (default stdout)");
  realize_cmd->add_option(
      "--randomize-choices", seed,
      "Draw construction choices at random from the given seed");

  CLI::App* count = app.add_subcommand(
      "count", "Count consistent diagram shapes in closed form");
  count->add_option("--simplices", simplices, "Number of simplices n")
      ->required();
  count->add_option("--pairs", pairs, "Number of finite pairs k")->required();
  count->add_option("--betti1", betti1, "First Betti number (default 0, tree)");

  CLI::App* equiv = app.add_subcommand(
      "equiv", "Compare two functions on the same graph");
  equiv->add_option("--relation", relation,
                    "persistence, forman, homological, or graph")
      ->required();
  equiv->add_option("-g,--graph", graph_path, "Graph JSON file")->required();
  equiv->add_option("--f1", f1_path, "First function JSON file")->required();
  equiv->add_option("--f2", f2_path, "Second function JSON file")->required();

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Stream every consistent diagram for a tree");
  enumerate->add_option("--tree", graph_path, "Tree JSON file")->required();
  enumerate->add_option("--pairs", pairs_opt,
                        "Restrict to k finite pairs (default: all k)");
  enumerate->add_flag("--check-roundtrip", check_roundtrip,
                      "Realize each diagram and verify its persistence");

  CLI::App* achievable = app.add_subcommand(
      "achievable", "Stream every achievable diagram on a small graph");
  achievable->add_option("--graph", graph_path, "Graph JSON file")->required();

  CLI::App* render = app.add_subcommand(
      "render", "Render a diagram as an ASCII or SVG barcode");
  render->add_option("-d,--diagram", diagram_path, "Diagram JSON file")
      ->required();
  render->add_option("--format", format, "ascii (default) or svg");
  render->add_option("--width", width, "ASCII line width budget");
  render->add_flag("--grid", grid, "Draw gridlines at integer times");
  render->add_option("--out", out_path, "Destination (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate))
      return cmd_validate(graph_path, function_path, out_path);
    if (app.got_subcommand(persist))
      return cmd_persist(graph_path, function_path, oracle, out_path);
    if (app.got_subcommand(realize_cmd))
      return cmd_realize(graph_path, diagram_path, out_path, seed);
    if (app.got_subcommand(count)) return cmd_count(simplices, pairs, betti1);
    if (app.got_subcommand(equiv))
      return cmd_equiv(relation, graph_path, f1_path, f2_path);
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(graph_path, pairs_opt, check_roundtrip);
    if (app.got_subcommand(achievable)) return cmd_achievable(graph_path);
    if (app.got_subcommand(render))
      return cmd_render(diagram_path, format, width, grid, out_path);
  } catch (const InconsistentDiagramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistentDiagram;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
