#include "qrelax/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qrelax/errors.hpp"

namespace qrelax {

namespace {

constexpr int kMaxQubits = 26;  // 2^26 amplitudes, 1 GiB; hard safety cap

}  // namespace

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
          lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

bool is_unitary(const Mat2& u, double tol) {
  // U U^dagger == I, checked entrywise.
  const std::complex<double> aa = u.a * std::conj(u.a) + u.b * std::conj(u.b);
  const std::complex<double> ab = u.a * std::conj(u.c) + u.b * std::conj(u.d);
  const std::complex<double> bb = u.c * std::conj(u.c) + u.d * std::conj(u.d);
  return std::abs(aa - 1.0) <= tol && std::abs(bb - 1.0) <= tol && std::abs(ab) <= tol;
}

Mat2 rot_y(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {{c, 0}, {-s, 0}, {s, 0}, {c, 0}};
}

Mat2 rot_z(double theta) {
  const std::complex<double> phase(std::cos(theta / 2), std::sin(theta / 2));
  return {std::conj(phase), 0.0, 0.0, phase};
}

Mat2 pauli_x_gate() { return {0, 1, 1, 0}; }

Mat2 pauli_y_gate() { return {0, {0, -1}, {0, 1}, 0}; }

Mat2 pauli_z_gate() { return {1, 0, 0, -1}; }

Mat2 hadamard_gate() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{r, 0}, {r, 0}, {r, 0}, {-r, 0}};
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits_ < 1) {
    throw std::invalid_argument("statevector needs at least one qubit");
  }
  if (num_qubits_ > kMaxQubits) {
    throw SizeLimitError("statevector capped at " + std::to_string(kMaxQubits) + " qubits");
  }
  amps_.assign(std::size_t{1} << num_qubits_, 0.0);
  amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<std::complex<double>> amps) {
  if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
    throw std::invalid_argument("amplitude count must be a power of two, at least 2");
  }
  Statevector sv(std::countr_zero(amps.size()));
  sv.amps_ = std::move(amps);
  if (std::abs(sv.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("amplitudes must be normalized");
  }
  return sv;
}

Statevector Statevector::product_state(const std::vector<std::array<double, 3>>& bloch) {
  const int n = static_cast<int>(bloch.size());
  Statevector sv(n);
  std::vector<std::complex<double>> amps{1.0};
  for (int q = 0; q < n; ++q) {
    const auto& [x, y, z] = bloch[q];
    const double len = std::sqrt(x * x + y * y + z * z);
    if (std::abs(len - 1.0) > 1e-6) {
      throw std::invalid_argument("bloch vector must have unit length");
    }
    const double theta = std::acos(std::clamp(z / len, -1.0, 1.0));
    const double phi = std::atan2(y, x);
    const std::complex<double> zero_amp = std::cos(theta / 2);
    const std::complex<double> one_amp =
        std::polar(std::sin(theta / 2), phi);
    std::vector<std::complex<double>> next(amps.size() * 2);
    for (std::size_t b = 0; b < amps.size(); ++b) {
      next[b] = amps[b] * zero_amp;
      next[b + amps.size()] = amps[b] * one_amp;
    }
    amps = std::move(next);
  }
  sv.amps_ = std::move(amps);
  sv.normalize();
  return sv;
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps_) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

void Statevector::normalize() {
  const double n = norm();
  if (n <= 0.0) {
    throw std::logic_error("cannot normalize a zero vector");
  }
  for (auto& a : amps_) {
    a /= n;
  }
}

void Statevector::apply_single_qubit(int qubit, const Mat2& u) {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  if (!is_unitary(u)) {
    throw std::invalid_argument("gate matrix is not unitary");
  }
  const std::size_t step = std::size_t{1} << qubit;
  for (std::size_t group = 0; group < amps_.size(); group += 2 * step) {
    for (std::size_t offset = 0; offset < step; ++offset) {
      const std::size_t i0 = group + offset;
      const std::size_t i1 = i0 + step;
      const std::complex<double> a0 = amps_[i0];
      const std::complex<double> a1 = amps_[i1];
      amps_[i0] = u.a * a0 + u.b * a1;
      amps_[i1] = u.c * a0 + u.d * a1;
    }
  }
}

void Statevector::apply_cz(int q1, int q2) {
  if (q1 < 0 || q1 >= num_qubits_ || q2 < 0 || q2 >= num_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  if (q1 == q2) {
    throw std::invalid_argument("controlled-Z needs two distinct qubits");
  }
  const std::size_t mask = (std::size_t{1} << q1) | (std::size_t{1} << q2);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == mask) {
      amps_[i] = -amps_[i];
    }
  }
}

double Statevector::probability_one(int qubit) const {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  const std::size_t bit = std::size_t{1} << qubit;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) {
      p += std::norm(amps_[i]);
    }
  }
  return p;
}

int Statevector::measure_qubit(int qubit, Rng& rng) {
  const double p1 = probability_one(qubit);
  const int outcome = rng.uniform() < p1 ? 1 : 0;
  const std::size_t bit = std::size_t{1} << qubit;
  const double keep = outcome ? p1 : 1.0 - p1;
  const double scale = 1.0 / std::sqrt(keep);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (((i & bit) != 0) == (outcome != 0)) {
      amps_[i] *= scale;
    } else {
      amps_[i] = 0.0;
    }
  }
  return outcome;
}

double fidelity(const Statevector& a, const Statevector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("fidelity needs states of equal dimension");
  }
  std::complex<double> overlap = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    overlap += std::conj(a[i]) * b[i];
  }
  return std::norm(overlap);
}

}  // namespace qrelax
