#include "qrelax/rounding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrelax/pauli.hpp"

namespace qrelax {

namespace {

void check_deformation(int d) {
  if (d < 1 || d > 3) {
    throw std::invalid_argument("deformation must be 1, 2 or 3");
  }
}

void check_basis_index(int deformation, int basis_index) {
  if (basis_index < 1 || basis_index > num_magic_bases(deformation)) {
    throw std::invalid_argument("basis index out of range for this deformation");
  }
}

Mat2 exp_minus_i_x(double t) {
  const std::complex<double> c = std::cos(t);
  const std::complex<double> ms = {0.0, -std::sin(t)};
  return {c, ms, ms, c};
}

Mat2 exp_minus_i_z(double s) {
  return {std::polar(1.0, -s), 0.0, 0.0, std::polar(1.0, s)};
}

Mat2 identity_gate() { return {1, 0, 0, 1}; }

// Vertex slot within its qubit: position of the vertex's axis in the
// deformation's cycle (X, Y, Z for d=3; X, Z for d=2; Z for d=1).
int axis_slot(int deformation, Axis axis) {
  if (deformation == 1) {
    return 0;
  }
  if (deformation == 2) {
    return axis == Axis::X ? 0 : 1;
  }
  return static_cast<int>(axis);
}

}  // namespace

int num_magic_bases(int deformation) {
  check_deformation(deformation);
  switch (deformation) {
    case 1:
      return 1;
    case 2:
      return 2;
    default:
      return 4;
  }
}

Mat2 magic_basis_unitary(int deformation, int basis_index) {
  check_basis_index(deformation, basis_index);
  if (deformation == 1) {
    return identity_gate();
  }
  // The decoding states sit at polar angle theta from +Z with azimuth phi;
  // exp(-i s Z) turns the azimuth to pi/2 and exp(-i t X) then rotates by
  // 2t = theta in the Y-Z plane, landing the +1 state on |0>.
  double s = 0.0;
  double t = 0.0;
  Mat2 prefix = identity_gate();
  if (deformation == 2) {
    s = std::numbers::pi / 4;
    t = std::numbers::pi / 8;
    if (basis_index == 2) {
      prefix = pauli_x_gate();
    }
  } else {
    s = std::numbers::pi / 8;
    t = std::acos(std::sqrt(0.5 * (1.0 + 1.0 / std::sqrt(3.0))));
    switch (basis_index) {
      case 1:
        prefix = pauli_x_gate();
        break;
      case 2:
        prefix = pauli_y_gate();
        break;
      case 3:
        prefix = pauli_z_gate();
        break;
      default:
        break;  // basis 4 keeps the identity prefix
    }
  }
  return mat_mul(exp_minus_i_x(t), mat_mul(exp_minus_i_z(s), prefix));
}

std::array<int, 3> decode_magic_outcome(int deformation, int basis_index, int sign) {
  check_basis_index(deformation, basis_index);
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
  const int s = sign;
  if (deformation == 1) {
    return {s, 0, 0};
  }
  if (deformation == 2) {
    // Conjugating the reference state by X keeps its X component and flips Z.
    return basis_index == 1 ? std::array<int, 3>{s, s, 0} : std::array<int, 3>{s, -s, 0};
  }
  // Conjugation by X/Y/Z keeps the matching component and flips the others.
  switch (basis_index) {
    case 1:
      return {s, -s, -s};
    case 2:
      return {-s, s, -s};
    case 3:
      return {-s, -s, s};
    default:
      return {s, s, s};
  }
}

RoundingSample magic_round_once(const Statevector& psi, const VertexPauliMap& map,
                                const Graph& g, Rng& rng) {
  if (psi.num_qubits() != map.num_qubits()) {
    throw std::invalid_argument("state and encoding qubit counts differ");
  }
  if (g.num_vertices() != map.num_vertices()) {
    throw std::invalid_argument("graph and encoding vertex counts differ");
  }
  const int d = map.deformation();
  const int bases_per_qubit = num_magic_bases(d);

  // Which vertices live on each qubit, and in which slot.
  std::vector<std::vector<std::pair<int, int>>> qubit_vertices(map.num_qubits());
  for (int v = 0; v < map.num_vertices(); ++v) {
    qubit_vertices[map[v].qubit].push_back({v, axis_slot(d, map[v].axis)});
  }

  Statevector work = psi;
  RoundingSample sample;
  sample.assignment.assign(map.num_vertices(), 0);
  sample.bases.reserve(map.num_qubits());
  for (int q = 0; q < map.num_qubits(); ++q) {
    const int basis =
        bases_per_qubit == 1 ? 1 : 1 + static_cast<int>(rng.below(bases_per_qubit));
    work.apply_single_qubit(q, magic_basis_unitary(d, basis));
    const int sign = work.measure_qubit(q, rng) == 0 ? 1 : -1;
    sample.bases.push_back({basis, sign});
    const std::array<int, 3> values = decode_magic_outcome(d, basis, sign);
    for (const auto& [v, slot] : qubit_vertices[q]) {
      sample.assignment[v] = values[slot];
    }
  }
  sample.cut = cut_value(g, sample.assignment);
  return sample;
}

RoundingBatch magic_round_batch(const Statevector& psi, const VertexPauliMap& map,
                                const Graph& g, int samples, std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("batch needs at least one sample");
  }
  RoundingBatch batch;
  batch.cuts.reserve(samples);
  double total = 0.0;
  for (int k = 0; k < samples; ++k) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(k));
    RoundingSample sample = magic_round_once(psi, map, g, rng);
    total += sample.cut;
    // Strict comparison keeps the earliest sample on ties.
    if (batch.cuts.empty() || sample.cut > batch.best.cut) {
      batch.best = sample;
    }
    batch.cuts.push_back(sample.cut);
  }
  batch.mean_cut = total / samples;
  return batch;
}

double expected_rounded_energy(const RelaxedHamiltonian& h, const Statevector& psi,
                               int deformation) {
  check_deformation(deformation);
  const double energy = relaxed_energy(h, psi);
  return h.constant() + (energy - h.constant()) / (deformation * deformation);
}

RoundingSample pauli_round(const Statevector& psi, const VertexPauliMap& map, const Graph& g,
                           double zero_tol, Rng& rng) {
  if (psi.num_qubits() != map.num_qubits()) {
    throw std::invalid_argument("state and encoding qubit counts differ");
  }
  if (g.num_vertices() != map.num_vertices()) {
    throw std::invalid_argument("graph and encoding vertex counts differ");
  }
  RoundingSample sample;
  sample.assignment.resize(map.num_vertices());
  for (int v = 0; v < map.num_vertices(); ++v) {
    const double value = expectation(map.vertex_pauli(v), psi);
    if (std::abs(value) > zero_tol) {
      sample.assignment[v] = value > 0.0 ? 1 : -1;
    } else {
      sample.assignment[v] = rng.sign();
    }
  }
  sample.cut = cut_value(g, sample.assignment);
  return sample;
}

double rounding_guarantee(int deformation) {
  check_deformation(deformation);
  switch (deformation) {
    case 1:
      return 1.0;
    case 2:
      return 5.0 / 8.0;
    default:
      return 5.0 / 9.0;
  }
}

double approximation_ratio(double cut, double optimal_cut) {
  if (optimal_cut <= 0.0) {
    throw std::invalid_argument("ratio needs a positive optimal cut");
  }
  return cut / optimal_cut;
}

}  // namespace qrelax
