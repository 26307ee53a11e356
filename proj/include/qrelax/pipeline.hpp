#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace qrelax {

enum class SolveMethod { Exact, Vqe };
enum class RoundingMode { Magic, Pauli, Both };

SolveMethod solve_method_from_string(const std::string& s);
RoundingMode rounding_mode_from_string(const std::string& s);

struct SolveOptions {
  std::string fixture;     // built-in instance name, or
  std::string graph_file;  // edge-list path (exactly one of the two)
  int deformation = 3;
  SolveMethod method = SolveMethod::Exact;
  RoundingMode rounding = RoundingMode::Magic;
  int samples = 1000;        // magic-rounding repetitions
  int depth = 2;             // ansatz depth (variational method only)
  int iterations = 500;      // optimizer iterations (variational method only)
  std::uint64_t seed = 1;
  int brute_force_limit = 26;  // exhaustive-optimum cap in vertices
};

// Full color -> encode -> relax -> round pipeline. The report carries the
// toolkit version and the seed; identical options produce byte-identical
// serialized reports. The ratio denominator is the exhaustive optimum when
// the graph is small enough, else a fixture's reference value when one
// exists, else absent.
nlohmann::ordered_json run_pipeline(const SolveOptions& opts);

struct BenchmarkOptions {
  std::vector<int> sizes;
  int graphs_per_size = 20;
  int samples = 200;  // magic-rounding repetitions per graph
  int deformation = 3;
  std::uint64_t seed = 1;
};

// Random 3-regular ensemble sweep. For each graph: exhaustive optimum,
// exact extremal eigenstate, magic-rounding batch, sign rounding. Emits
// CSV "size,graph_seed,method,gamma" with methods magic (batch mean),
// magic_best (batch best) and pauli, rows ordered by size, graph, method.
// Sizes whose encoding exceeds the eigensolver cap are skipped with a note
// on `warnings` when given.
void run_benchmark(const BenchmarkOptions& opts, std::ostream& csv_out,
                   std::ostream* warnings = nullptr);

}  // namespace qrelax
