#pragma once

#include <span>

#include "qrelax/statevector.hpp"

namespace qrelax {

// Hardware-efficient ansatz: `depth` repetitions of a single-qubit rotation
// layer, with a chain of CZ entanglers (0,1), (1,2), ... between successive
// layers. Each qubit in each layer applies Rz, Ry, Rz in circuit order, so a
// layer consumes 3 parameters per qubit. Depth 1 has no entanglers and
// prepares an arbitrary product state.
struct AnsatzSpec {
  int num_qubits = 1;
  int depth = 1;

  int param_count() const { return 3 * num_qubits * depth; }
};

// |psi(theta)> from |0...0>. params.size() must equal spec.param_count().
Statevector prepare_ansatz(const AnsatzSpec& spec, std::span<const double> params);

}  // namespace qrelax
