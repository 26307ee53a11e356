#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qrelax/encoding.hpp"
#include "qrelax/pauli.hpp"
#include "qrelax/statevector.hpp"

namespace qrelax {

// One randomized-measurement snapshot: per qubit, the basis drawn uniformly
// from {X, Y, Z} and the measured eigenvalue (+1 or -1).
struct ShadowRecord {
  std::vector<Axis> bases;
  std::vector<int> outcomes;
};

// `shots` snapshots of psi. Per shot, qubits are processed in ascending
// order: draw the basis, rotate that qubit into the computational frame
// (X via H, Y via H S-dagger), measure it, collapse, continue.
std::vector<ShadowRecord> collect_shadows(const Statevector& psi, int shots, std::uint64_t seed);

// Single-snapshot estimator for a weight-1 or weight-2 Pauli: the product
// over support qubits of 3 * outcome when the shot's basis matches the
// operator's letter there, and 0 for the whole shot otherwise. Magnitude
// is therefore at most 9.
double single_shot_estimate(const ShadowRecord& record, const PauliString& p);

// Mean of single_shot_estimate over all records; unbiased for <psi|p|psi>.
double estimate_pauli(const std::vector<ShadowRecord>& records, const PauliString& p);

// constant + sum of coeff * estimate_pauli(term). Requires at least one
// record and weight <= 2 terms.
double estimate_hamiltonian(const std::vector<ShadowRecord>& records, const RelaxedHamiltonian& h);

struct SampleBudget {
  double epsilon = 0.1;
  double delta = 0.05;
  int num_edges = 1;
};

// Shot counts sufficient for the stated guarantees; logarithms are natural.
// Multiplicative: ceil((2 * 81 / eps^2) * ln(2|E|/delta)).
long long samples_multiplicative(const SampleBudget& b);
// Additive: ceil((81 / (2 eps^2)) * |E|^2 * ln(2|E|/delta)).
long long samples_additive(double epsilon, double delta, int num_edges);
// Recovery of an embedded assignment's cut: ceil(2 * 81 * ln(2|E|/delta)).
long long samples_embedded(int num_edges, double delta);

// CSV dump: header "shot,qubit,basis,outcome", one row per qubit per shot.
void write_shadows_csv(const std::vector<ShadowRecord>& records, std::ostream& out);

}  // namespace qrelax
