#pragma once

#include <cstdint>
#include <string>

#include "qrelax/encoding.hpp"
#include "qrelax/statevector.hpp"

namespace qrelax {

enum class EigenMethod {
  Auto,      // diagonal fast path, else dense up to the dense limit, else Lanczos
  Dense,     // full dense diagonalization (small systems only)
  Lanczos,   // matrix-free restarted Lanczos
  Diagonal,  // scan of the diagonal; requires a Z/I-only Hamiltonian
};

struct EigenOptions {
  EigenMethod method = EigenMethod::Auto;
  double tol = 1e-8;        // residual tolerance |H v - E v| <= tol * max(1, |E|)
  int max_restarts = 50;    // Lanczos restart cap
  int krylov_dim = 64;      // Lanczos block size per restart
  int dense_limit = 12;     // largest qubit count handled densely under Auto
  int max_qubits = 24;      // hard cap; beyond this the solver refuses to run
  std::uint64_t seed = 1;   // seeds the Lanczos start vector
};

struct EigenResult {
  Statevector state;
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;  // restarts used (Lanczos); 0 for dense/diagonal
  EigenMethod method_used = EigenMethod::Dense;
};

// Maximal eigenpair of H (the relaxation is a maximization problem).
// Throws SizeLimitError above max_qubits and ConvergenceError if Lanczos
// fails to reach tol within max_restarts.
EigenResult extremal_eigenstate(const RelaxedHamiltonian& h, const EigenOptions& opts = {});

std::string method_name(EigenMethod m);

}  // namespace qrelax
