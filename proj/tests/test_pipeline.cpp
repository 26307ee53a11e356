#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrelax/errors.hpp"
#include "qrelax/pipeline.hpp"
#include "qrelax/version.hpp"

using namespace qrelax;

namespace {

SolveOptions petersen_opts() {
  SolveOptions opts;
  opts.fixture = "PETERSEN";
  opts.deformation = 3;
  opts.samples = 200;
  opts.seed = 7;
  return opts;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("pipeline report structure and internal consistency") {
  const nlohmann::ordered_json report = run_pipeline(petersen_opts());

  CHECK(report["version"].get<std::string>() == kVersion);
  CHECK(report["seed"].get<std::uint64_t>() == 7);
  CHECK(report["graph"]["source"].get<std::string>() == "PETERSEN");
  CHECK(report["graph"]["vertices"].get<int>() == 10);
  CHECK(report["graph"]["edges"].get<int>() == 15);
  CHECK(report["graph"]["total_weight"].get<double>() == doctest::Approx(15.0));
  CHECK(report["deformation"].get<int>() == 3);
  CHECK(report["num_colors"].get<int>() == 3);
  CHECK(report["qubits"].get<int>() == 4);
  CHECK(report["method"].get<std::string>() == "exact");

  const double energy = report["relaxation"]["energy"].get<double>();
  CHECK(energy == doctest::Approx(15.908909928095039).epsilon(1e-10));
  CHECK(report["optimal_cut"].get<double>() == doctest::Approx(12.0));
  CHECK(report["optimal_source"].get<std::string>() == "exhaustive");

  const double expected = report["expected_rounded_energy"].get<double>();
  CHECK(expected == doctest::Approx(7.5 + (energy - 7.5) / 9.0).epsilon(1e-12));
  CHECK(expected == doctest::Approx(8.434323325343891).epsilon(1e-10));

  REQUIRE(report["rounding"].size() == 1);
  const auto& entry = report["rounding"][0];
  CHECK(entry["method"].get<std::string>() == "magic");
  CHECK(entry["samples"].get<int>() == 200);
  const auto cuts = entry["cuts"].get<std::vector<double>>();
  REQUIRE(cuts.size() == 200);
  double mean = 0.0;
  double best = 0.0;
  for (double c : cuts) {
    CHECK(c >= 0.0);
    CHECK(c <= 15.0);
    mean += c;
    best = std::max(best, c);
  }
  mean /= static_cast<double>(cuts.size());
  CHECK(entry["mean_cut"].get<double>() == doctest::Approx(mean).epsilon(1e-12));
  CHECK(entry["best_cut"].get<double>() == doctest::Approx(best));
  CHECK(entry["mean_gamma"].get<double>() == doctest::Approx(mean / 12.0).epsilon(1e-12));
  CHECK(entry["best_gamma"].get<double>() == doctest::Approx(best / 12.0).epsilon(1e-12));
  CHECK(entry["optimal_cut"].get<double>() == doctest::Approx(12.0));
  const auto assignment = entry["best_assignment"].get<std::vector<int>>();
  REQUIRE(assignment.size() == 10);
  for (int v : assignment) {
    CHECK((v == 1 || v == -1));
  }
}

TEST_CASE("sign rounding recovers the optimum of the smallest regular fixture") {
  SolveOptions opts;
  opts.fixture = "G16";
  opts.rounding = RoundingMode::Pauli;
  opts.samples = 1;
  const nlohmann::ordered_json report = run_pipeline(opts);
  REQUIRE(report["rounding"].size() == 1);
  const auto& entry = report["rounding"][0];
  CHECK(entry["method"].get<std::string>() == "pauli");
  CHECK(entry["best_cut"].get<double>() == doctest::Approx(20.0));
  CHECK(entry["best_gamma"].get<double>() == doctest::Approx(1.0));
  CHECK(entry["mean_cut"].get<double>() == entry["best_cut"].get<double>());
  CHECK(entry["cuts"].size() == 1);
}

TEST_CASE("both rounding modes run in a fixed order") {
  SolveOptions opts = petersen_opts();
  opts.rounding = RoundingMode::Both;
  opts.samples = 30;
  const nlohmann::ordered_json report = run_pipeline(opts);
  REQUIRE(report["rounding"].size() == 2);
  CHECK(report["rounding"][0]["method"].get<std::string>() == "magic");
  CHECK(report["rounding"][1]["method"].get<std::string>() == "pauli");
}

TEST_CASE("the undeformed encoding makes every route exact") {
  SolveOptions opts;
  opts.fixture = "PETERSEN";
  opts.deformation = 1;
  opts.rounding = RoundingMode::Both;
  opts.samples = 1;
  const nlohmann::ordered_json report = run_pipeline(opts);
  CHECK(report["qubits"].get<int>() == 10);
  CHECK(report["relaxation"]["solver"].get<std::string>() == "diagonal");
  CHECK(report["relaxation"]["energy"].get<double>() == doctest::Approx(12.0));
  for (const auto& entry : report["rounding"]) {
    CAPTURE(entry["method"].get<std::string>());
    CHECK(entry["best_gamma"].get<double>() == doctest::Approx(1.0));
    CHECK(entry["mean_gamma"].get<double>() == doctest::Approx(1.0));
  }
}

TEST_CASE("identical options produce byte-identical reports") {
  const SolveOptions opts = petersen_opts();
  const std::string a = run_pipeline(opts).dump(2);
  const std::string b = run_pipeline(opts).dump(2);
  CHECK(a == b);

  SolveOptions reseeded = opts;
  reseeded.seed = 8;
  CHECK(run_pipeline(reseeded).dump(2) != a);
}

TEST_CASE("pipeline option validation") {
  SolveOptions opts;
  CHECK_THROWS_AS(run_pipeline(opts), std::invalid_argument);  // no source
  opts.fixture = "PETERSEN";
  opts.graph_file = "also.txt";
  CHECK_THROWS_AS(run_pipeline(opts), std::invalid_argument);  // two sources
  opts.graph_file.clear();

  SolveOptions bad = petersen_opts();
  bad.deformation = 0;
  CHECK_THROWS_AS(run_pipeline(bad), std::invalid_argument);
  bad.deformation = 4;
  CHECK_THROWS_AS(run_pipeline(bad), std::invalid_argument);

  bad = petersen_opts();
  bad.samples = 0;
  CHECK_THROWS_AS(run_pipeline(bad), std::invalid_argument);
  bad = petersen_opts();
  bad.depth = 0;
  CHECK_THROWS_AS(run_pipeline(bad), std::invalid_argument);
  bad = petersen_opts();
  bad.iterations = -1;
  CHECK_THROWS_AS(run_pipeline(bad), std::invalid_argument);

  SolveOptions huge;
  huge.fixture = "G40";
  huge.deformation = 1;  // one vertex per qubit needs 40 qubits
  CHECK_THROWS_AS(run_pipeline(huge), SizeLimitError);
}

TEST_CASE("pipeline reads graphs from edge-list files") {
  const std::string path = "pipeline_edge_input.txt";
  {
    std::ofstream out(path);
    out << "# vertices 2\n0 1 1\n";
  }
  SolveOptions opts;
  opts.graph_file = path;
  opts.samples = 50;
  const nlohmann::ordered_json report = run_pipeline(opts);
  std::remove(path.c_str());
  CHECK(report["graph"]["source"].get<std::string>() == path);
  CHECK(report["graph"]["vertices"].get<int>() == 2);
  CHECK(report["optimal_cut"].get<double>() == doctest::Approx(1.0));
  CHECK(report["relaxation"]["energy"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("the variational method reports a self-consistent energy") {
  SolveOptions opts = petersen_opts();
  opts.method = SolveMethod::Vqe;
  opts.depth = 1;
  opts.iterations = 40;
  opts.samples = 20;
  opts.seed = 3;
  const nlohmann::ordered_json report = run_pipeline(opts);
  CHECK(report["method"].get<std::string>() == "vqe");
  CHECK(report["relaxation"]["depth"].get<int>() == 1);
  CHECK(report["relaxation"]["iterations"].get<int>() == 40);
  const double energy = report["relaxation"]["energy"].get<double>();
  CHECK(energy <= 15.908909928095039 + 1e-9);  // bounded by the true extremum
  CHECK(energy >= 0.0);
  // The analytic rounded energy is the affine image of the reported energy,
  // confirming both derive from the same prepared state.
  CHECK(report["expected_rounded_energy"].get<double>() ==
        doctest::Approx(7.5 + (energy - 7.5) / 9.0).epsilon(1e-10));
}

TEST_CASE("parsing of method and rounding names") {
  CHECK(solve_method_from_string("exact") == SolveMethod::Exact);
  CHECK(solve_method_from_string("vqe") == SolveMethod::Vqe);
  CHECK_THROWS_AS(solve_method_from_string("annealer"), std::invalid_argument);
  CHECK(rounding_mode_from_string("magic") == RoundingMode::Magic);
  CHECK(rounding_mode_from_string("pauli") == RoundingMode::Pauli);
  CHECK(rounding_mode_from_string("both") == RoundingMode::Both);
  CHECK_THROWS_AS(rounding_mode_from_string("nearest"), std::invalid_argument);
}

TEST_CASE("benchmark sweep output") {
  BenchmarkOptions opts;
  opts.sizes = {4};
  opts.graphs_per_size = 3;
  opts.samples = 20;
  opts.deformation = 1;
  opts.seed = 5;

  std::ostringstream csv;
  run_benchmark(opts, csv);
  const std::vector<std::string> lines = split_lines(csv.str());
  REQUIRE(lines.size() == 1 + 3 * 3);
  CHECK(lines[0] == "size,graph_seed,method,gamma");
  const char* methods[] = {"magic", "magic_best", "pauli"};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string size_field, seed_field, method_field, gamma_field;
    REQUIRE(std::getline(row, size_field, ','));
    REQUIRE(std::getline(row, seed_field, ','));
    REQUIRE(std::getline(row, method_field, ','));
    REQUIRE(std::getline(row, gamma_field, ','));
    CHECK(size_field == "4");
    CHECK(method_field == methods[(i - 1) % 3]);
    // The undeformed encoding solves four-vertex instances outright.
    CHECK(std::stod(gamma_field) == doctest::Approx(1.0));
  }

  // Determinism and duplicate-size normalization.
  std::ostringstream again;
  run_benchmark(opts, again);
  CHECK(again.str() == csv.str());
  BenchmarkOptions doubled = opts;
  doubled.sizes = {4, 4};
  std::ostringstream dedup;
  run_benchmark(doubled, dedup);
  CHECK(dedup.str() == csv.str());
}

TEST_CASE("benchmark gammas are valid ratios with the batch best dominating") {
  BenchmarkOptions opts;
  opts.sizes = {6, 4};
  opts.graphs_per_size = 2;
  opts.samples = 50;
  opts.deformation = 3;
  opts.seed = 11;
  std::ostringstream csv;
  run_benchmark(opts, csv);
  const std::vector<std::string> lines = split_lines(csv.str());
  REQUIRE(lines.size() == 1 + 2 * 2 * 3);
  int previous_size = 0;
  for (std::size_t i = 1; i < lines.size(); i += 3) {
    std::istringstream magic_row(lines[i]);
    std::istringstream best_row(lines[i + 1]);
    std::istringstream pauli_row(lines[i + 2]);
    std::string field;
    std::getline(magic_row, field, ',');
    const int size = std::stoi(field);
    CHECK(size >= previous_size);  // ordered by size after normalization
    previous_size = size;

    std::string skip;
    std::getline(magic_row, skip, ',');
    std::getline(magic_row, skip, ',');
    std::getline(magic_row, field, ',');
    const double magic_gamma = std::stod(field);
    for (int k = 0; k < 3; ++k) {
      std::getline(best_row, field, ',');
    }
    std::getline(best_row, field, ',');
    const double best_gamma = std::stod(field);
    for (int k = 0; k < 3; ++k) {
      std::getline(pauli_row, field, ',');
    }
    std::getline(pauli_row, field, ',');
    const double pauli_gamma = std::stod(field);

    CHECK(magic_gamma > 0.0);
    CHECK(magic_gamma <= 1.0 + 1e-12);
    CHECK(best_gamma >= magic_gamma - 1e-12);
    CHECK(best_gamma <= 1.0 + 1e-12);
    CHECK(pauli_gamma > 0.0);
    CHECK(pauli_gamma <= 1.0 + 1e-12);
  }
}

TEST_CASE("benchmark validation and oversized-size skipping") {
  BenchmarkOptions opts;
  opts.sizes = {};
  std::ostringstream sink;
  CHECK_THROWS_AS(run_benchmark(opts, sink), std::invalid_argument);
  opts.sizes = {5};  // odd vertex count cannot be 3-regular
  CHECK_THROWS_AS(run_benchmark(opts, sink), std::invalid_argument);
  opts.sizes = {2};
  CHECK_THROWS_AS(run_benchmark(opts, sink), std::invalid_argument);
  opts.sizes = {4};
  opts.graphs_per_size = 0;
  CHECK_THROWS_AS(run_benchmark(opts, sink), std::invalid_argument);
  opts.graphs_per_size = 1;
  opts.samples = 0;
  CHECK_THROWS_AS(run_benchmark(opts, sink), std::invalid_argument);
  opts.samples = 10;
  opts.deformation = 4;
  CHECK_THROWS_AS(run_benchmark(opts, sink), std::invalid_argument);

  // A size beyond the exhaustive-search cap is skipped with a warning while
  // the small size still produces its rows.
  BenchmarkOptions mixed;
  mixed.sizes = {4, 40};
  mixed.graphs_per_size = 2;
  mixed.samples = 10;
  mixed.deformation = 1;
  std::ostringstream csv;
  std::ostringstream warnings;
  run_benchmark(mixed, csv, &warnings);
  const std::vector<std::string> lines = split_lines(csv.str());
  REQUIRE(lines.size() == 1 + 2 * 3);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(lines[i].substr(0, 2) == "4,");
  }
  CHECK(warnings.str().find("skipping size 40") != std::string::npos);
}
