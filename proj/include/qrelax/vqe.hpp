#pragma once

#include <optional>
#include <vector>

#include "qrelax/ansatz.hpp"
#include "qrelax/encoding.hpp"
#include "qrelax/spsa.hpp"

namespace qrelax {

struct VqeResult {
  Statevector state;
  double energy = 0.0;
  std::vector<double> params;
  std::vector<SpsaTracePoint> trace;
};

// Variational maximization of <psi(theta)|H|psi(theta)> over the ansatz
// family. Initial parameters default to uniform draws in [-pi, pi) from
// cfg.seed's parameter substream.
VqeResult vqe_relax(const RelaxedHamiltonian& h, const AnsatzSpec& spec, const SpsaConfig& cfg,
                    const std::optional<std::vector<double>>& initial_params = std::nullopt);

}  // namespace qrelax
