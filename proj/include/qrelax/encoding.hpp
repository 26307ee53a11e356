#pragma once

#include <iosfwd>
#include <vector>

#include "qrelax/graph.hpp"
#include "qrelax/pauli.hpp"
#include "qrelax/statevector.hpp"

namespace qrelax {

struct VertexPauli {
  int qubit = 0;
  Axis axis = Axis::X;
};

// Vertex -> weight-1 Pauli assignment for a deformation d in {1, 2, 3}.
// Each color class packs its vertices onto ceil(|V_c|/d) qubits, d vertices
// per qubit, cycling through the axes X, Y, Z (X, Z for d=2; Z only for d=1).
// Qubit blocks are laid out color-ascending, vertices index-ascending within
// a color. Slots left over in the last qubit of a block act as dummy
// variables pinned to +1 at embedding time.
class VertexPauliMap {
 public:
  VertexPauliMap(int deformation, int num_qubits, std::vector<VertexPauli> vertex_ops,
                 Coloring coloring);

  int deformation() const { return deformation_; }
  int num_qubits() const { return num_qubits_; }
  int num_vertices() const { return static_cast<int>(vertex_ops_.size()); }
  const VertexPauli& operator[](int v) const { return vertex_ops_.at(v); }
  const Coloring& coloring() const { return coloring_; }

  // The vertex's operator as a full weight-1 Pauli string.
  PauliString vertex_pauli(int v) const;

 private:
  int deformation_;
  int num_qubits_;
  std::vector<VertexPauli> vertex_ops_;
  Coloring coloring_;
};

VertexPauliMap assign_paulis(const Graph& g, const Coloring& coloring, int deformation);

struct HamiltonianTerm {
  double coeff = 0.0;
  PauliString op;
};

// H = constant + sum_t coeff_t * P_t. The identity part is kept out of the
// term list so downstream estimators only ever see weight-2 operators.
class RelaxedHamiltonian {
 public:
  RelaxedHamiltonian(int num_qubits, double constant, std::vector<HamiltonianTerm> terms);

  int num_qubits() const { return num_qubits_; }
  double constant() const { return constant_; }
  const std::vector<HamiltonianTerm>& terms() const { return terms_; }

  // True when every term is diagonal in the computational basis (Z/I only).
  bool is_diagonal() const;

  // Matrix-free application out = H * in (out is overwritten).
  void apply(const Statevector& in, Statevector& out) const;

  // Diagonal entry <b|H|b>; valid only for diagonal Hamiltonians.
  double diagonal_entry(std::size_t basis_index) const;

 private:
  int num_qubits_;
  double constant_;
  std::vector<HamiltonianTerm> terms_;
};

// Relaxation of weighted MaxCut: constant W/2 plus, per edge, a term with
// coefficient -(d * w_e)/2 on the weight-2 product of the endpoint Paulis.
RelaxedHamiltonian build_hamiltonian(const Graph& g, const VertexPauliMap& map);

// Product state F(m): per qubit, the pure state whose Bloch vector is
// (1/sqrt(d)) * sum of m_v along each assigned axis, dummies at +1. Satisfies
// expectation(P_v, state) = m_v / sqrt(d) for every vertex.
Statevector embed_assignment(const VertexPauliMap& map, const Assignment& m);

// constant + sum of coeff * expectation(term), evaluated term by term.
double relaxed_energy(const RelaxedHamiltonian& h, const Statevector& psi);

// Text serialization: "constant <value>" header, then one "coeff pauli" line
// per term, 17 significant digits, exact decimal round-trip.
void write_hamiltonian(const RelaxedHamiltonian& h, std::ostream& out);
RelaxedHamiltonian read_hamiltonian(std::istream& in);

}  // namespace qrelax
