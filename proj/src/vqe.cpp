#include "qrelax/vqe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrelax/rng.hpp"

namespace qrelax {

VqeResult vqe_relax(const RelaxedHamiltonian& h, const AnsatzSpec& spec, const SpsaConfig& cfg,
                    const std::optional<std::vector<double>>& initial_params) {
  if (spec.num_qubits != h.num_qubits()) {
    throw std::invalid_argument("ansatz and hamiltonian qubit counts differ");
  }
  std::vector<double> initial;
  if (initial_params.has_value()) {
    if (static_cast<int>(initial_params->size()) != spec.param_count()) {
      throw std::invalid_argument("initial parameter count does not match the ansatz");
    }
    initial = *initial_params;
  } else {
    // Parameter draws come from a dedicated substream so they stay decoupled
    // from the optimizer's own perturbation stream.
    Rng rng = Rng::substream(cfg.seed, 0);
    initial.resize(spec.param_count());
    for (double& value : initial) {
      value = rng.uniform_in(-std::numbers::pi, std::numbers::pi);
    }
  }
  const auto objective = [&h, &spec](const std::vector<double>& params) {
    return relaxed_energy(h, prepare_ansatz(spec, params));
  };
  SpsaResult opt = spsa_maximize(objective, initial, cfg);
  VqeResult result{prepare_ansatz(spec, opt.best_params), opt.best_objective,
                   std::move(opt.best_params), std::move(opt.trace)};
  return result;
}

}  // namespace qrelax
