#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrelax/eigensolver.hpp"
#include "qrelax/encoding.hpp"
#include "qrelax/errors.hpp"
#include "qrelax/graph.hpp"
#include "qrelax/pipeline.hpp"
#include "qrelax/problems.hpp"
#include "qrelax/shadows.hpp"
#include "qrelax/version.hpp"

namespace {

using nlohmann::ordered_json;

// Flags shared by the graph-consuming subcommands.
struct GraphSource {
  std::string fixture;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* fx = cmd->add_option("--fixture", fixture, "built-in instance name");
    auto* gf = cmd->add_option("--graph", file, "edge-list file");
    fx->excludes(gf);
  }

  qrelax::Graph load() const {
    if (fixture.empty() == file.empty()) {
      throw std::invalid_argument("provide exactly one of --fixture or --graph");
    }
    return fixture.empty() ? qrelax::read_edge_list_file(file) : qrelax::fixture(fixture);
  }

  std::string name() const { return fixture.empty() ? file : fixture; }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + out_path);
  }
  out << text;
}

std::string check_format(const std::string& format) {
  if (format != "json" && format != "csv") {
    throw std::invalid_argument("unknown format '" + format + "' (expected json or csv)");
  }
  return format;
}

int run_solve(const GraphSource& source, const qrelax::SolveOptions& opts,
              const std::string& format, const std::string& out_path) {
  (void)source;
  const ordered_json report = qrelax::run_pipeline(opts);
  std::ostringstream text;
  if (format == "json") {
    text << report.dump(2) << "\n";
  } else {
    // Plot-ready cut distribution, one row per rounding sample.
    text << "method,sample,cut\n";
    for (const auto& entry : report.at("rounding")) {
      const auto& cuts = entry.at("cuts");
      for (std::size_t i = 0; i < cuts.size(); ++i) {
        text << entry.at("method").get<std::string>() << ',' << i << ','
             << cuts[i].dump() << "\n";
      }
    }
  }
  emit(text.str(), out_path);
  return 0;
}

int run_color(const GraphSource& source, const std::string& format,
              const std::string& out_path) {
  const qrelax::Graph g = source.load();
  const qrelax::Coloring coloring = qrelax::ldf_coloring(g);
  std::ostringstream text;
  if (format == "json") {
    ordered_json report;
    report["version"] = qrelax::kVersion;
    report["graph"] = source.name();
    report["num_colors"] = coloring.num_colors;
    report["color_of"] = coloring.color_of;
    text << report.dump(2) << "\n";
  } else {
    text << "vertex,color\n";
    for (std::size_t v = 0; v < coloring.color_of.size(); ++v) {
      text << v << ',' << coloring.color_of[v] << "\n";
    }
  }
  emit(text.str(), out_path);
  return 0;
}

int run_encode(const GraphSource& source, int deformation, const std::string& format,
               const std::string& out_path) {
  const qrelax::Graph g = source.load();
  const qrelax::Coloring coloring = qrelax::ldf_coloring(g);
  const qrelax::VertexPauliMap map = qrelax::assign_paulis(g, coloring, deformation);
  const qrelax::RelaxedHamiltonian h = qrelax::build_hamiltonian(g, map);
  std::ostringstream text;
  if (format == "json") {
    ordered_json report;
    report["version"] = qrelax::kVersion;
    report["graph"] = source.name();
    report["deformation"] = deformation;
    report["num_colors"] = coloring.num_colors;
    report["qubits"] = map.num_qubits();
    ordered_json vertices = ordered_json::array();
    for (int v = 0; v < map.num_vertices(); ++v) {
      vertices.push_back({{"vertex", v},
                          {"color", coloring.color_of[v]},
                          {"qubit", map[v].qubit},
                          {"pauli", std::string(1, qrelax::axis_letter(map[v].axis))}});
    }
    report["vertices"] = std::move(vertices);
    std::ostringstream ham;
    qrelax::write_hamiltonian(h, ham);
    report["hamiltonian"] = ham.str();
    text << report.dump(2) << "\n";
  } else {
    text << "vertex,color,qubit,pauli\n";
    for (int v = 0; v < map.num_vertices(); ++v) {
      text << v << ',' << coloring.color_of[v] << ',' << map[v].qubit << ','
           << qrelax::axis_letter(map[v].axis) << "\n";
    }
  }
  emit(text.str(), out_path);
  return 0;
}

int run_shadows(const GraphSource& source, int deformation, int shots, std::uint64_t seed,
                const std::string& format, const std::string& out_path) {
  const qrelax::Graph g = source.load();
  const qrelax::Coloring coloring = qrelax::ldf_coloring(g);
  const qrelax::VertexPauliMap map = qrelax::assign_paulis(g, coloring, deformation);
  const qrelax::RelaxedHamiltonian h = qrelax::build_hamiltonian(g, map);
  const qrelax::EigenResult res = qrelax::extremal_eigenstate(h);
  const std::vector<qrelax::ShadowRecord> records =
      qrelax::collect_shadows(res.state, shots, seed);
  std::ostringstream text;
  if (format == "json") {
    const int edges = static_cast<int>(g.edges().size());
    ordered_json report;
    report["version"] = qrelax::kVersion;
    report["seed"] = seed;
    report["graph"] = source.name();
    report["deformation"] = deformation;
    report["shots"] = shots;
    report["exact_energy"] = res.value;
    const double estimate = qrelax::estimate_hamiltonian(records, h);
    report["estimated_energy"] = estimate;
    report["absolute_error"] = std::abs(estimate - res.value);
    report["budget"] = {
        {"multiplicative_eps0.1_delta0.05",
         qrelax::samples_multiplicative({0.1, 0.05, edges})},
        {"embedded_delta0.05", qrelax::samples_embedded(edges, 0.05)}};
    text << report.dump(2) << "\n";
  } else {
    qrelax::write_shadows_csv(records, text);
  }
  emit(text.str(), out_path);
  return 0;
}

int run_fixtures(const std::string& format, const std::string& out_path,
                 const std::string& export_dir) {
  if (!export_dir.empty()) {
    for (const std::string& name : qrelax::fixture_names()) {
      std::string lower = name;
      for (char& c : lower) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      const std::string path = export_dir + "/" + lower + ".txt";
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw std::invalid_argument("cannot open output file: " + path);
      }
      qrelax::write_edge_list(qrelax::fixture(name), out);
    }
    return 0;
  }
  std::ostringstream text;
  if (format == "json") {
    ordered_json report = ordered_json::array();
    for (const std::string& name : qrelax::fixture_names()) {
      const qrelax::Graph g = qrelax::fixture(name);
      report.push_back({{"name", name},
                        {"vertices", g.num_vertices()},
                        {"edges", g.edges().size()},
                        {"total_weight", g.total_weight()},
                        {"reference_optimum", qrelax::fixture_reference_optimum(name)}});
    }
    text << report.dump(2) << "\n";
  } else {
    text << "name,vertices,edges,total_weight,reference_optimum\n";
    for (const std::string& name : qrelax::fixture_names()) {
      const qrelax::Graph g = qrelax::fixture(name);
      text << name << ',' << g.num_vertices() << ',' << g.edges().size() << ','
           << qrelax::format_weight(g.total_weight()) << ','
           << qrelax::format_weight(qrelax::fixture_reference_optimum(name)) << "\n";
    }
  }
  emit(text.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MaxCut via qubit-efficient relaxation and rounding"};
  app.set_version_flag("--version", qrelax::kVersion);
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "run the full relax-and-round pipeline");
  GraphSource solve_source;
  solve_source.attach(solve);
  qrelax::SolveOptions solve_opts;
  std::string solve_method = "exact";
  std::string solve_rounding = "magic";
  std::string solve_format = "json";
  std::string solve_out;
  solve->add_option("--d", solve_opts.deformation, "deformation (1, 2 or 3)")
      ->check(CLI::Range(1, 3));
  solve->add_option("--method", solve_method, "exact or vqe");
  solve->add_option("--rounding", solve_rounding, "magic, pauli or both");
  solve->add_option("--samples", solve_opts.samples, "magic-rounding repetitions");
  solve->add_option("--depth", solve_opts.depth, "ansatz depth (vqe)");
  solve->add_option("--iterations", solve_opts.iterations, "optimizer iterations (vqe)");
  solve->add_option("--seed", solve_opts.seed, "random seed");
  solve->add_option("--format", solve_format, "json or csv");
  solve->add_option("--out", solve_out, "output file (default stdout)");

  // benchmark
  auto* benchmark = app.add_subcommand("benchmark", "random 3-regular ensemble sweep");
  qrelax::BenchmarkOptions bench_opts;
  std::string bench_format = "csv";
  std::string bench_out;
  benchmark->add_option("--sizes", bench_opts.sizes, "vertex counts (even)")
      ->required()
      ->delimiter(',');
  benchmark->add_option("--graphs", bench_opts.graphs_per_size, "graphs per size");
  benchmark->add_option("--samples", bench_opts.samples, "magic-rounding repetitions");
  benchmark->add_option("--d", bench_opts.deformation, "deformation (1, 2 or 3)")
      ->check(CLI::Range(1, 3));
  benchmark->add_option("--seed", bench_opts.seed, "random seed");
  benchmark->add_option("--format", bench_format, "csv");
  benchmark->add_option("--out", bench_out, "output file (default stdout)");

  // color
  auto* color = app.add_subcommand("color", "greedy largest-degree-first coloring");
  GraphSource color_source;
  color_source.attach(color);
  std::string color_format = "json";
  std::string color_out;
  color->add_option("--format", color_format, "json or csv");
  color->add_option("--out", color_out, "output file (default stdout)");

  // encode
  auto* encode = app.add_subcommand("encode", "vertex-to-qubit operator assignment");
  GraphSource encode_source;
  encode_source.attach(encode);
  int encode_d = 3;
  std::string encode_format = "json";
  std::string encode_out;
  encode->add_option("--d", encode_d, "deformation (1, 2 or 3)")->check(CLI::Range(1, 3));
  encode->add_option("--format", encode_format, "json or csv");
  encode->add_option("--out", encode_out, "output file (default stdout)");

  // shadows
  auto* shadows = app.add_subcommand(
      "shadows", "finite-shot energy estimate from randomized measurements");
  GraphSource shadows_source;
  shadows_source.attach(shadows);
  int shadows_d = 3;
  int shadows_shots = 10000;
  std::uint64_t shadows_seed = 1;
  std::string shadows_format = "json";
  std::string shadows_out;
  shadows->add_option("--d", shadows_d, "deformation (1, 2 or 3)")->check(CLI::Range(1, 3));
  shadows->add_option("--shots", shadows_shots, "snapshots to collect");
  shadows->add_option("--seed", shadows_seed, "random seed");
  shadows->add_option("--format", shadows_format, "json (summary) or csv (raw records)");
  shadows->add_option("--out", shadows_out, "output file (default stdout)");

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "list built-in instances");
  std::string fixtures_format = "json";
  std::string fixtures_out;
  std::string fixtures_export;
  fixtures->add_option("--format", fixtures_format, "json or csv");
  fixtures->add_option("--out", fixtures_out, "output file (default stdout)");
  fixtures->add_option("--export", fixtures_export, "write fixture edge lists to a directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) {
      solve_opts.fixture = solve_source.fixture;
      solve_opts.graph_file = solve_source.file;
      solve_opts.method = qrelax::solve_method_from_string(solve_method);
      solve_opts.rounding = qrelax::rounding_mode_from_string(solve_rounding);
      return run_solve(solve_source, solve_opts, check_format(solve_format), solve_out);
    }
    if (benchmark->parsed()) {
      if (bench_format != "csv") {
        throw std::invalid_argument("benchmark emits csv only");
      }
      std::ostringstream text;
      qrelax::run_benchmark(bench_opts, text, &std::cerr);
      emit(text.str(), bench_out);
      return 0;
    }
    if (color->parsed()) {
      return run_color(color_source, check_format(color_format), color_out);
    }
    if (encode->parsed()) {
      return run_encode(encode_source, encode_d, check_format(encode_format), encode_out);
    }
    if (shadows->parsed()) {
      return run_shadows(shadows_source, shadows_d, shadows_shots, shadows_seed,
                         check_format(shadows_format), shadows_out);
    }
    if (fixtures->parsed()) {
      return run_fixtures(check_format(fixtures_format), fixtures_out, fixtures_export);
    }
  } catch (const qrelax::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const qrelax::ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
