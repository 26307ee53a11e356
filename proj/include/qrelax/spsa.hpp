#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace qrelax {

struct SpsaConfig {
  int iterations = 500;
  double a = 0.2;          // gain numerator for the step size
  double c = 0.1;          // gain numerator for the perturbation size
  double alpha = 0.602;    // step-size decay exponent
  double gamma = 0.101;    // perturbation decay exponent
  double big_a = -1.0;     // stability constant; negative means 0.05 * iterations
  bool calibrate_a = false;  // estimate a from 25 gradient probes before the run
  std::uint64_t seed = 1;
};

struct SpsaTracePoint {
  int iteration = 0;       // 0-based
  double objective = 0.0;  // f at the current iterate, before the update
  double best_so_far = 0.0;
};

struct SpsaResult {
  std::vector<double> best_params;
  double best_objective = 0.0;
  std::vector<SpsaTracePoint> trace;
};

// Simultaneous-perturbation maximization of `objective`. Each iteration
// records f(theta_k), then estimates the gradient from two evaluations at
// theta_k +/- c_k * Delta with Rademacher Delta, and ascends. Returns the
// best iterate seen, which need not be the last. A non-finite objective
// value aborts with a diagnostic.
SpsaResult spsa_maximize(const std::function<double(const std::vector<double>&)>& objective,
                         const std::vector<double>& initial, const SpsaConfig& cfg);

// CSV trace dump: header "iteration,objective,best_so_far", one row per point.
void write_trace_csv(const std::vector<SpsaTracePoint>& trace, std::ostream& out);

}  // namespace qrelax
