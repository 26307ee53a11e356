#include "qrelax/ansatz.hpp"

#include <stdexcept>

namespace qrelax {

Statevector prepare_ansatz(const AnsatzSpec& spec, std::span<const double> params) {
  if (spec.num_qubits < 1 || spec.depth < 1) {
    throw std::invalid_argument("ansatz needs at least one qubit and one layer");
  }
  if (static_cast<int>(params.size()) != spec.param_count()) {
    throw std::invalid_argument("expected " + std::to_string(spec.param_count()) +
                                " parameters, got " + std::to_string(params.size()));
  }
  Statevector psi(spec.num_qubits);
  std::size_t p = 0;
  for (int layer = 0; layer < spec.depth; ++layer) {
    if (layer > 0) {
      for (int q = 0; q + 1 < spec.num_qubits; ++q) {
        psi.apply_cz(q, q + 1);
      }
    }
    for (int q = 0; q < spec.num_qubits; ++q) {
      psi.apply_single_qubit(q, rot_z(params[p++]));
      psi.apply_single_qubit(q, rot_y(params[p++]));
      psi.apply_single_qubit(q, rot_z(params[p++]));
    }
  }
  return psi;
}

}  // namespace qrelax
