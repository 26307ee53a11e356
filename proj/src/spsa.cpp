#include "qrelax/spsa.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "qrelax/errors.hpp"
#include "qrelax/rng.hpp"

namespace qrelax {

namespace {

double checked_eval(const std::function<double(const std::vector<double>&)>& objective,
                    const std::vector<double>& params, int iteration) {
  const double value = objective(params);
  if (!std::isfinite(value)) {
    throw ConvergenceError("optimization aborted: objective returned a non-finite value at "
                           "iteration " +
                           std::to_string(iteration));
  }
  return value;
}

}  // namespace

SpsaResult spsa_maximize(const std::function<double(const std::vector<double>&)>& objective,
                         const std::vector<double>& initial, const SpsaConfig& cfg) {
  if (initial.empty()) {
    throw std::invalid_argument("optimizer needs at least one parameter");
  }
  if (cfg.iterations < 0 || cfg.a <= 0.0 || cfg.c <= 0.0 || cfg.alpha <= 0.0 ||
      cfg.gamma <= 0.0) {
    throw std::invalid_argument("optimizer gains and exponents must be positive");
  }
  const double big_a = cfg.big_a < 0.0 ? 0.05 * cfg.iterations : cfg.big_a;
  const std::size_t p = initial.size();

  SpsaResult result;
  result.best_params = initial;
  if (cfg.iterations == 0) {
    result.best_objective = checked_eval(objective, initial, 0);
    return result;
  }

  Rng rng(cfg.seed);
  std::vector<double> theta = initial;
  std::vector<int> delta(p);
  std::vector<double> probe(p);

  double a = cfg.a;
  if (cfg.calibrate_a) {
    // Scale the step gain so the first update moves by about c along each
    // coordinate, using the average gradient magnitude of 25 probes at the
    // starting point.
    double gradient_mag = 0.0;
    const int kProbes = 25;
    for (int trial = 0; trial < kProbes; ++trial) {
      for (std::size_t i = 0; i < p; ++i) {
        delta[i] = rng.sign();
      }
      for (std::size_t i = 0; i < p; ++i) {
        probe[i] = theta[i] + cfg.c * delta[i];
      }
      const double plus = checked_eval(objective, probe, 0);
      for (std::size_t i = 0; i < p; ++i) {
        probe[i] = theta[i] - cfg.c * delta[i];
      }
      const double minus = checked_eval(objective, probe, 0);
      gradient_mag += std::abs(plus - minus) / (2.0 * cfg.c);
    }
    gradient_mag /= kProbes;
    if (gradient_mag > 1e-12) {
      a = cfg.c * std::pow(big_a + 1.0, cfg.alpha) / gradient_mag;
    }
  }

  double best = -std::numeric_limits<double>::infinity();
  result.trace.reserve(cfg.iterations);
  for (int k = 0; k < cfg.iterations; ++k) {
    const double fk = checked_eval(objective, theta, k);
    if (fk > best) {
      best = fk;
      result.best_params = theta;
    }
    result.trace.push_back({k, fk, best});

    const double ck = cfg.c / std::pow(k + 1.0, cfg.gamma);
    const double ak = a / std::pow(k + 1.0 + big_a, cfg.alpha);
    for (std::size_t i = 0; i < p; ++i) {
      delta[i] = rng.sign();
    }
    for (std::size_t i = 0; i < p; ++i) {
      probe[i] = theta[i] + ck * delta[i];
    }
    const double plus = checked_eval(objective, probe, k);
    if (plus > best) {
      best = plus;
      result.best_params = probe;
    }
    for (std::size_t i = 0; i < p; ++i) {
      probe[i] = theta[i] - ck * delta[i];
    }
    const double minus = checked_eval(objective, probe, k);
    if (minus > best) {
      best = minus;
      result.best_params = probe;
    }
    const double scale = (plus - minus) / (2.0 * ck);
    for (std::size_t i = 0; i < p; ++i) {
      theta[i] += ak * scale * delta[i];  // ascent along the gradient estimate
    }
  }
  result.best_objective = best;
  return result;
}

void write_trace_csv(const std::vector<SpsaTracePoint>& trace, std::ostream& out) {
  out << "iteration,objective,best_so_far\n";
  char buf[128];
  for (const SpsaTracePoint& point : trace) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", point.iteration, point.objective,
                  point.best_so_far);
    out << buf;
  }
}

}  // namespace qrelax
