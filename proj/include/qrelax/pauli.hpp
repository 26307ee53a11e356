#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace qrelax {

class Statevector;

enum class Axis { X = 0, Y = 1, Z = 2 };

char axis_letter(Axis a);

// n-qubit Pauli string in the symplectic bit-pair encoding: qubit q carries
// letter I/X/Y/Z according to (x bit, z bit) = (0,0)/(1,0)/(1,1)/(0,1).
// Text rendering puts qubit 0 leftmost.
class PauliString {
 public:
  explicit PauliString(int num_qubits);  // identity
  PauliString(int num_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  static PauliString single(int num_qubits, int qubit, Axis axis);
  static PauliString parse(const std::string& text);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t x_mask() const { return x_mask_; }
  std::uint64_t z_mask() const { return z_mask_; }
  int weight() const;
  char letter(int qubit) const;
  std::string to_string() const;

  bool operator==(const PauliString&) const = default;

 private:
  int num_qubits_;
  std::uint64_t x_mask_;
  std::uint64_t z_mask_;
};

// Weight-1 Pauli with the given axis at the given qubit.
PauliString single_axis_pauli(int num_qubits, int qubit, Axis axis);

struct PauliProduct {
  PauliString op;
  std::complex<double> phase;  // one of 1, i, -1, -i
};

// Pauli group product a * b with the global phase tracked.
PauliProduct multiply(const PauliString& a, const PauliString& b);

// <psi|P|psi>, computed matrix-free in O(2^n). The value of a Hermitian
// operator is real; any imaginary rounding residue must stay below 1e-9.
// Requires psi normalized within 1e-9.
double expectation(const PauliString& p, const Statevector& psi);

}  // namespace qrelax
