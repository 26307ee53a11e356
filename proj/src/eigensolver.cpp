#include "qrelax/eigensolver.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qrelax/errors.hpp"
#include "qrelax/rng.hpp"

namespace qrelax {

namespace {

using CVec = std::vector<std::complex<double>>;

// out = (H + shift) * in on raw amplitude arrays.
void apply_shifted(const RelaxedHamiltonian& h, double shift, const CVec& in, CVec& out) {
  const std::size_t dim = in.size();
  const std::complex<double> diag = h.constant() + shift;
  for (std::size_t b = 0; b < dim; ++b) {
    out[b] = diag * in[b];
  }
  for (const HamiltonianTerm& t : h.terms()) {
    const std::uint64_t x = t.op.x_mask();
    const std::uint64_t z = t.op.z_mask();
    std::complex<double> phase;
    switch (std::popcount(x & z) & 3) {
      case 0:
        phase = {t.coeff, 0.0};
        break;
      case 1:
        phase = {0.0, t.coeff};
        break;
      case 2:
        phase = {-t.coeff, 0.0};
        break;
      default:
        phase = {0.0, -t.coeff};
        break;
    }
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
      out[b ^ x] += phase * sign * in[b];
    }
  }
}

std::complex<double> dot(const CVec& a, const CVec& b) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += std::conj(a[i]) * b[i];
  }
  return acc;
}

double vec_norm(const CVec& a) {
  double sum = 0.0;
  for (const auto& v : a) {
    sum += std::norm(v);
  }
  return std::sqrt(sum);
}

double residual_norm(const RelaxedHamiltonian& h, const CVec& x, double value) {
  CVec hx(x.size());
  apply_shifted(h, 0.0, x, hx);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += std::norm(hx[i] - value * x[i]);
  }
  return std::sqrt(sum);
}

EigenResult make_result(CVec amplitudes, double value, double residual, int iterations,
                        EigenMethod method) {
  return {Statevector::from_amplitudes(std::move(amplitudes)), value, residual, iterations,
          method};
}

EigenResult solve_diagonal(const RelaxedHamiltonian& h) {
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  std::size_t best_index = 0;
  double best_value = h.diagonal_entry(0);
  for (std::size_t b = 1; b < dim; ++b) {
    const double value = h.diagonal_entry(b);
    if (value > best_value) {
      best_value = value;
      best_index = b;
    }
  }
  CVec amps(dim, 0.0);
  amps[best_index] = 1.0;
  return make_result(std::move(amps), best_value, 0.0, 0, EigenMethod::Diagonal);
}

EigenResult solve_dense(const RelaxedHamiltonian& h, const EigenOptions& opts) {
  if (h.num_qubits() > opts.dense_limit) {
    throw SizeLimitError("dense eigensolver capped at " + std::to_string(opts.dense_limit) +
                         " qubits, got " + std::to_string(h.num_qubits()));
  }
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    m(b, b) = h.constant();
  }
  for (const HamiltonianTerm& t : h.terms()) {
    const std::uint64_t x = t.op.x_mask();
    const std::uint64_t z = t.op.z_mask();
    std::complex<double> phase;
    switch (std::popcount(x & z) & 3) {
      case 0:
        phase = {t.coeff, 0.0};
        break;
      case 1:
        phase = {0.0, t.coeff};
        break;
      case 2:
        phase = {-t.coeff, 0.0};
        break;
      default:
        phase = {0.0, -t.coeff};
        break;
    }
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
      m(b ^ x, b) += phase * sign;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("dense eigensolver failed");
  }
  const double value = solver.eigenvalues()(dim - 1);
  CVec amps(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    amps[i] = solver.eigenvectors()(i, dim - 1);
  }
  const double residual = residual_norm(h, amps, value);
  return make_result(std::move(amps), value, residual, 0, EigenMethod::Dense);
}

EigenResult solve_lanczos(const RelaxedHamiltonian& h, const EigenOptions& opts) {
  if (opts.krylov_dim < 2 || opts.max_restarts < 1) {
    throw std::invalid_argument("lanczos needs krylov_dim >= 2 and max_restarts >= 1");
  }
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  // Positive shift keeps the target (algebraically largest) eigenvalue the
  // dominant one of the shifted operator.
  double shift = h.constant();
  for (const HamiltonianTerm& t : h.terms()) {
    shift += std::abs(t.coeff);
  }

  Rng rng(opts.seed);
  CVec v(dim);
  for (auto& a : v) {
    a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
  }
  {
    const double n0 = vec_norm(v);
    for (auto& a : v) {
      a /= n0;
    }
  }

  const int krylov = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(opts.krylov_dim), dim));
  double last_residual = 0.0;
  for (int restart = 0; restart < opts.max_restarts; ++restart) {
    std::vector<CVec> basis;
    basis.push_back(v);
    std::vector<double> alpha;
    std::vector<double> beta;
    CVec w(dim);
    for (int j = 0; j < krylov; ++j) {
      apply_shifted(h, shift, basis[j], w);
      alpha.push_back(dot(basis[j], w).real());
      for (std::size_t i = 0; i < dim; ++i) {
        w[i] -= alpha[j] * basis[j][i];
      }
      if (j > 0) {
        for (std::size_t i = 0; i < dim; ++i) {
          w[i] -= beta[j - 1] * basis[j - 1][i];
        }
      }
      // Full reorthogonalization; restores orthogonality lost to rounding.
      for (const CVec& prev : basis) {
        const std::complex<double> overlap = dot(prev, w);
        for (std::size_t i = 0; i < dim; ++i) {
          w[i] -= overlap * prev[i];
        }
      }
      const double wn = vec_norm(w);
      if (wn < 1e-12) {
        break;  // exact invariant subspace reached
      }
      beta.push_back(wn);
      CVec next(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        next[i] = w[i] / wn;
      }
      basis.push_back(std::move(next));
    }

    const int k = static_cast<int>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < k) {
        tri(i, i + 1) = beta[i];
        tri(i + 1, i) = beta[i];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("tridiagonal eigensolver failed");
    }
    const double theta = solver.eigenvalues()(k - 1);
    CVec x(dim, 0.0);
    for (int i = 0; i < k; ++i) {
      const double yi = solver.eigenvectors()(i, k - 1);
      for (std::size_t b = 0; b < dim; ++b) {
        x[b] += yi * basis[i][b];
      }
    }
    {
      const double xn = vec_norm(x);
      for (auto& a : x) {
        a /= xn;
      }
    }
    const double value = theta - shift;
    last_residual = residual_norm(h, x, value);
    if (last_residual <= opts.tol * std::max(1.0, std::abs(value))) {
      return make_result(std::move(x), value, last_residual, restart + 1,
                         EigenMethod::Lanczos);
    }
    v = std::move(x);
  }
  throw ConvergenceError("lanczos did not converge within " +
                             std::to_string(opts.max_restarts) + " restarts",
                         last_residual);
}

}  // namespace

std::string method_name(EigenMethod m) {
  switch (m) {
    case EigenMethod::Auto:
      return "auto";
    case EigenMethod::Dense:
      return "dense";
    case EigenMethod::Lanczos:
      return "lanczos";
    default:
      return "diagonal";
  }
}

EigenResult extremal_eigenstate(const RelaxedHamiltonian& h, const EigenOptions& opts) {
  if (h.num_qubits() > opts.max_qubits) {
    throw SizeLimitError("eigensolver capped at " + std::to_string(opts.max_qubits) +
                         " qubits, got " + std::to_string(h.num_qubits()));
  }
  EigenMethod method = opts.method;
  if (method == EigenMethod::Auto) {
    if (h.is_diagonal()) {
      method = EigenMethod::Diagonal;
    } else if (h.num_qubits() <= opts.dense_limit) {
      method = EigenMethod::Dense;
    } else {
      method = EigenMethod::Lanczos;
    }
  }
  switch (method) {
    case EigenMethod::Diagonal:
      if (!h.is_diagonal()) {
        throw std::invalid_argument("diagonal solver needs a Z/I-only hamiltonian");
      }
      return solve_diagonal(h);
    case EigenMethod::Dense:
      return solve_dense(h, opts);
    default:
      return solve_lanczos(h, opts);
  }
}

}  // namespace qrelax
