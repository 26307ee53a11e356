#include "qrelax/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "qrelax/eigensolver.hpp"
#include "qrelax/encoding.hpp"
#include "qrelax/errors.hpp"
#include "qrelax/graph.hpp"
#include "qrelax/problems.hpp"
#include "qrelax/rounding.hpp"
#include "qrelax/rng.hpp"
#include "qrelax/version.hpp"
#include "qrelax/vqe.hpp"

namespace qrelax {

namespace {

// Encoding sizes past this need more than the exact solver supports; checked
// up front so oversized requests fail before any 2^n allocation.
constexpr int kQubitLimit = 24;

// RNG stream ids within one pipeline run.
constexpr std::uint64_t kMagicStream = 1;
constexpr std::uint64_t kPauliStream = 2;

std::uint64_t mix_u64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic per-graph seed for the benchmark sweep.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t size, std::uint64_t index,
                          std::uint64_t purpose) {
  std::uint64_t h = mix_u64(base);
  h = mix_u64(h ^ size);
  h = mix_u64(h ^ index);
  return mix_u64(h ^ purpose);
}

nlohmann::ordered_json rounding_entry(const std::string& method,
                                      const std::vector<double>& cuts, double best_cut,
                                      const Assignment& best_assignment, double mean_cut,
                                      const std::optional<double>& optimal_cut) {
  nlohmann::ordered_json entry;
  entry["method"] = method;
  entry["samples"] = cuts.size();
  entry["cuts"] = cuts;
  entry["best_cut"] = best_cut;
  entry["best_assignment"] = best_assignment;
  entry["mean_cut"] = mean_cut;
  if (optimal_cut.has_value()) {
    entry["mean_gamma"] = mean_cut / *optimal_cut;
    entry["best_gamma"] = best_cut / *optimal_cut;
    entry["optimal_cut"] = *optimal_cut;
  }
  return entry;
}

std::string format_gamma(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

SolveMethod solve_method_from_string(const std::string& s) {
  if (s == "exact") {
    return SolveMethod::Exact;
  }
  if (s == "vqe") {
    return SolveMethod::Vqe;
  }
  throw std::invalid_argument("unknown method '" + s + "' (expected exact or vqe)");
}

RoundingMode rounding_mode_from_string(const std::string& s) {
  if (s == "magic") {
    return RoundingMode::Magic;
  }
  if (s == "pauli") {
    return RoundingMode::Pauli;
  }
  if (s == "both") {
    return RoundingMode::Both;
  }
  throw std::invalid_argument("unknown rounding '" + s + "' (expected magic, pauli or both)");
}

nlohmann::ordered_json run_pipeline(const SolveOptions& opts) {
  if (opts.fixture.empty() == opts.graph_file.empty()) {
    throw std::invalid_argument("provide exactly one of fixture name or graph file");
  }
  if (opts.deformation < 1 || opts.deformation > 3) {
    throw std::invalid_argument("deformation must be 1, 2 or 3");
  }
  if (opts.samples < 1 || opts.depth < 1 || opts.iterations < 0) {
    throw std::invalid_argument("samples and depth must be positive, iterations >= 0");
  }
  const Graph g =
      opts.fixture.empty() ? read_edge_list_file(opts.graph_file) : fixture(opts.fixture);
  const std::string source = opts.fixture.empty() ? opts.graph_file : opts.fixture;

  const Coloring coloring = ldf_coloring(g);
  const VertexPauliMap map = assign_paulis(g, coloring, opts.deformation);
  if (map.num_qubits() > kQubitLimit) {
    throw SizeLimitError("encoding needs " + std::to_string(map.num_qubits()) +
                         " qubits, above the supported " + std::to_string(kQubitLimit));
  }
  const RelaxedHamiltonian h = build_hamiltonian(g, map);

  std::optional<double> optimal;
  std::string optimal_source;
  if (g.num_vertices() <= opts.brute_force_limit) {
    optimal = brute_force_maxcut(g, opts.brute_force_limit).cut;
    optimal_source = "exhaustive";
  } else if (!opts.fixture.empty()) {
    optimal = fixture_reference_optimum(opts.fixture);
    optimal_source = "reference";
  }

  nlohmann::ordered_json report;
  report["version"] = kVersion;
  report["seed"] = opts.seed;
  report["graph"] = {{"source", source},
                     {"vertices", g.num_vertices()},
                     {"edges", g.edges().size()},
                     {"total_weight", g.total_weight()}};
  report["deformation"] = opts.deformation;
  report["num_colors"] = coloring.num_colors;
  report["qubits"] = map.num_qubits();

  Statevector psi(1);
  if (opts.method == SolveMethod::Exact) {
    EigenOptions eigen_opts;
    eigen_opts.seed = opts.seed;
    eigen_opts.max_qubits = kQubitLimit;
    const EigenResult res = extremal_eigenstate(h, eigen_opts);
    report["method"] = "exact";
    report["relaxation"] = {{"energy", res.value},
                            {"solver", method_name(res.method_used)},
                            {"iterations", res.iterations},
                            {"residual", res.residual}};
    psi = res.state;
  } else {
    SpsaConfig cfg;
    cfg.iterations = opts.iterations;
    cfg.seed = opts.seed;
    const AnsatzSpec spec{map.num_qubits(), opts.depth};
    VqeResult res = vqe_relax(h, spec, cfg);
    report["method"] = "vqe";
    report["relaxation"] = {{"energy", res.energy},
                            {"depth", opts.depth},
                            {"iterations", opts.iterations}};
    psi = std::move(res.state);
  }
  report["expected_rounded_energy"] =
      expected_rounded_energy(h, psi, opts.deformation);
  if (optimal.has_value()) {
    report["optimal_cut"] = *optimal;
    report["optimal_source"] = optimal_source;
  }

  nlohmann::ordered_json rounding = nlohmann::ordered_json::array();
  if (opts.rounding == RoundingMode::Magic || opts.rounding == RoundingMode::Both) {
    const RoundingBatch batch = magic_round_batch(
        psi, map, g, opts.samples, derive_seed(opts.seed, 0, 0, kMagicStream));
    rounding.push_back(rounding_entry("magic", batch.cuts, batch.best.cut,
                                      batch.best.assignment, batch.mean_cut, optimal));
  }
  if (opts.rounding == RoundingMode::Pauli || opts.rounding == RoundingMode::Both) {
    Rng rng = Rng::substream(opts.seed, kPauliStream);
    const RoundingSample sample = pauli_round(psi, map, g, 1e-9, rng);
    rounding.push_back(rounding_entry("pauli", {sample.cut}, sample.cut, sample.assignment,
                                      sample.cut, optimal));
  }
  report["rounding"] = std::move(rounding);
  return report;
}

void run_benchmark(const BenchmarkOptions& opts, std::ostream& csv_out,
                   std::ostream* warnings) {
  if (opts.sizes.empty() || opts.graphs_per_size < 1 || opts.samples < 1) {
    throw std::invalid_argument("benchmark needs sizes, graphs per size and samples");
  }
  if (opts.deformation < 1 || opts.deformation > 3) {
    throw std::invalid_argument("deformation must be 1, 2 or 3");
  }
  std::vector<int> sizes = opts.sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (int size : sizes) {
    if (size < 4 || size * 3 % 2 != 0) {
      throw std::invalid_argument("each size needs at least 4 vertices and an even "
                                  "vertex count for 3-regular graphs");
    }
  }

  csv_out << "size,graph_seed,method,gamma\n";
  for (int size : sizes) {
    for (int index = 0; index < opts.graphs_per_size; ++index) {
      const std::uint64_t graph_seed = derive_seed(opts.seed, size, index, 0);
      const Graph g = random_regular(size, 3, graph_seed);
      double optimal = 0.0;
      try {
        optimal = brute_force_maxcut(g).cut;
      } catch (const SizeLimitError& ex) {
        if (warnings != nullptr) {
          *warnings << "skipping size " << size << ": " << ex.what() << "\n";
        }
        break;
      }
      const Coloring coloring = ldf_coloring(g);
      const VertexPauliMap map = assign_paulis(g, coloring, opts.deformation);
      const RelaxedHamiltonian h = build_hamiltonian(g, map);
      EigenOptions eigen_opts;
      eigen_opts.seed = derive_seed(opts.seed, size, index, 1);
      if (map.num_qubits() > eigen_opts.max_qubits) {
        if (warnings != nullptr) {
          *warnings << "skipping size " << size << ": encoding needs " << map.num_qubits()
                    << " qubits\n";
        }
        break;
      }
      const EigenResult res = extremal_eigenstate(h, eigen_opts);

      const RoundingBatch batch = magic_round_batch(
          res.state, map, g, opts.samples, derive_seed(opts.seed, size, index, 2));
      Rng pauli_rng(derive_seed(opts.seed, size, index, 3));
      const RoundingSample pauli = pauli_round(res.state, map, g, 1e-9, pauli_rng);

      csv_out << size << ',' << graph_seed << ",magic,"
              << format_gamma(batch.mean_cut / optimal) << "\n";
      csv_out << size << ',' << graph_seed << ",magic_best,"
              << format_gamma(batch.best.cut / optimal) << "\n";
      csv_out << size << ',' << graph_seed << ",pauli," << format_gamma(pauli.cut / optimal)
              << "\n";
    }
  }
}

}  // namespace qrelax
