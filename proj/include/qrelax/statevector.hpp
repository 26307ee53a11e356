#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "qrelax/rng.hpp"

namespace qrelax {

// Row-major 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
  std::complex<double> a, b, c, d;
};

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs);
bool is_unitary(const Mat2& u, double tol = 1e-10);

// Rotation gates, angle convention R(theta) = exp(-i theta P / 2).
Mat2 rot_y(double theta);
Mat2 rot_z(double theta);
Mat2 pauli_x_gate();
Mat2 pauli_y_gate();
Mat2 pauli_z_gate();
Mat2 hadamard_gate();

// Dense n-qubit statevector with qubit q mapped to bit q of the amplitude
// index (qubit 0 is the least significant bit).
class Statevector {
 public:
  explicit Statevector(int num_qubits);  // |0...0>
  static Statevector from_amplitudes(std::vector<std::complex<double>> amps);

  // Product state from one unit Bloch vector (x, y, z) per qubit.
  static Statevector product_state(const std::vector<std::array<double, 3>>& bloch);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::complex<double>& operator[](std::size_t i) { return amps_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();

  // In-place single-qubit gate; rejects matrices that are not unitary within
  // 1e-10. Stride-2^qubit sweep, norm preserved.
  void apply_single_qubit(int qubit, const Mat2& u);

  // Controlled-Z: flips the sign of amplitudes where both qubits are 1.
  void apply_cz(int q1, int q2);

  double probability_one(int qubit) const;

  // Projective Z measurement of one qubit: samples the outcome from the
  // current marginal, collapses, renormalizes. Returns the bit (0 or 1).
  int measure_qubit(int qubit, Rng& rng);

 private:
  int num_qubits_;
  std::vector<std::complex<double>> amps_;
};

// |<a|b>|^2 for unit vectors.
double fidelity(const Statevector& a, const Statevector& b);

}  // namespace qrelax
