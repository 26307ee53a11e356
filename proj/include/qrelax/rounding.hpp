#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qrelax/encoding.hpp"
#include "qrelax/graph.hpp"
#include "qrelax/rng.hpp"
#include "qrelax/statevector.hpp"

namespace qrelax {

// Number of measurement bases per qubit for a deformation: 4 (d=3), 2 (d=2),
// 1 (d=1, plain computational basis).
int num_magic_bases(int deformation);

// Single-qubit rotation U_i mapping the i-th pair of decoding states onto
// {|0>, |1>}, so measuring Z after it realizes that basis. Indices are
// 1-based: d=3 uses i in {1..4} with Pauli prefixes X, Y, Z, I; d=2 uses
// i in {1,2} with prefixes I, X; d=1 has the single basis i=1 (identity).
Mat2 magic_basis_unitary(int deformation, int basis_index);

// Values for the vertices packed on one qubit, given the basis chosen and
// the measured sign (+1 for outcome 0, -1 for outcome 1). Entry k is the
// value for the vertex occupying the k-th axis slot of the deformation's
// cycle (X, Y, Z for d=3; X, Z for d=2; Z for d=1); trailing entries are 0.
std::array<int, 3> decode_magic_outcome(int deformation, int basis_index, int sign);

struct BasisChoice {
  int basis = 1;  // 1-based basis index
  int sign = 0;   // measured sign, +1 or -1
};

struct RoundingSample {
  Assignment assignment;
  double cut = 0.0;
  std::vector<BasisChoice> bases;  // one per qubit; empty for sign rounding
};

// One magic-rounding shot: per qubit in ascending order, draw a basis
// uniformly, rotate, measure, collapse; decode each qubit's outcome into
// the cut values of its vertices (dummies are discarded).
RoundingSample magic_round_once(const Statevector& psi, const VertexPauliMap& map, const Graph& g,
                                Rng& rng);

struct RoundingBatch {
  std::vector<double> cuts;   // per-sample cut values in draw order
  RoundingSample best;        // first sample attaining the maximum cut
  double mean_cut = 0.0;
};

RoundingBatch magic_round_batch(const Statevector& psi, const VertexPauliMap& map, const Graph& g,
                                int samples, std::uint64_t seed);

// Closed form for the average cut of magic rounding on state psi:
// constant + (E - constant) / d^2 with E the relaxed energy of psi.
double expected_rounded_energy(const RelaxedHamiltonian& h, const Statevector& psi,
                               int deformation);

// Deterministic sign rounding from exact expectation values:
// m_v = sign <psi| P_v |psi>, with a random sign when the expectation sits
// within zero_tol of zero.
RoundingSample pauli_round(const Statevector& psi, const VertexPauliMap& map, const Graph& g,
                           double zero_tol, Rng& rng);

// Worst-case approximation ratio guaranteed for magic rounding applied to a
// maximal eigenstate: 5/9 (d=3), 5/8 (d=2), 1 (d=1).
double rounding_guarantee(int deformation);

double approximation_ratio(double cut, double optimal_cut);

}  // namespace qrelax
