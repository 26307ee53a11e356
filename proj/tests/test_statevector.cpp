#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "oracle.hpp"
#include "qrelax/errors.hpp"
#include "qrelax/rng.hpp"
#include "qrelax/statevector.hpp"

using namespace qrelax;
using Complex = std::complex<double>;

namespace {

Statevector random_state(int n, Rng& rng) {
  const std::size_t dim = std::size_t(1) << n;
  std::vector<Complex> amps(dim);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    norm2 += std::norm(a);
  }
  for (auto& a : amps) {
    a /= std::sqrt(norm2);
  }
  return Statevector::from_amplitudes(amps);
}

}  // namespace

TEST_CASE("fresh states start in the all-zero basis vector") {
  const Statevector psi(3);
  CHECK(psi.num_qubits() == 3);
  CHECK(psi.dim() == 8);
  CHECK(std::abs(psi[0] - Complex(1.0, 0.0)) < 1e-15);
  for (std::size_t b = 1; b < 8; ++b) {
    CHECK(std::abs(psi[b]) == 0.0);
  }
  CHECK(psi.norm() == doctest::Approx(1.0));
}

TEST_CASE("construction limits and amplitude validation") {
  CHECK_THROWS_AS(Statevector(0), std::invalid_argument);
  CHECK_THROWS_AS(Statevector(27), SizeLimitError);
  CHECK_THROWS_AS(Statevector::from_amplitudes({Complex(1.0, 0.0)}),
                  std::invalid_argument);  // not a power of two >= 2
  CHECK_THROWS_AS(Statevector::from_amplitudes(
                      {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Statevector::from_amplitudes({Complex(1.0, 0.0), Complex(1.0, 0.0)}),
                  std::invalid_argument);  // unnormalized
}

TEST_CASE("product states realize the requested Bloch vectors") {
  const Statevector zero = Statevector::product_state({{0.0, 0.0, 1.0}});
  CHECK(std::abs(zero[0] - Complex(1.0, 0.0)) < 1e-12);

  const Statevector one = Statevector::product_state({{0.0, 0.0, -1.0}});
  CHECK(std::abs(one[1]) == doctest::Approx(1.0).epsilon(1e-12));

  const Statevector plus = Statevector::product_state({{1.0, 0.0, 0.0}});
  CHECK(std::abs(plus[0]) == doctest::Approx(std::numbers::sqrt2 / 2).epsilon(1e-12));
  CHECK(std::abs(plus[1]) == doctest::Approx(std::numbers::sqrt2 / 2).epsilon(1e-12));

  // Qubit 0 is the least significant bit: |q1=1, q0=0> sits at index 2.
  const Statevector pair =
      Statevector::product_state({{0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}});
  CHECK(std::abs(pair[2]) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(Statevector::product_state({{0.5, 0.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Statevector::product_state({}), std::invalid_argument);
}

TEST_CASE("standard gate constructors are unitary with the expected action") {
  CHECK(is_unitary(hadamard_gate()));
  CHECK(is_unitary(pauli_x_gate()));
  CHECK(is_unitary(pauli_y_gate()));
  CHECK(is_unitary(pauli_z_gate()));
  CHECK(is_unitary(rot_y(0.7)));
  CHECK(is_unitary(rot_z(-1.3)));
  CHECK_FALSE(is_unitary({Complex(1.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0),
                          Complex(1.0, 0.0)}));

  Statevector psi(1);
  psi.apply_single_qubit(0, pauli_x_gate());
  CHECK(std::abs(psi[1] - Complex(1.0, 0.0)) < 1e-12);

  Statevector h(1);
  h.apply_single_qubit(0, hadamard_gate());
  CHECK(fidelity(h, Statevector::product_state({{1.0, 0.0, 0.0}})) ==
        doctest::Approx(1.0).epsilon(1e-12));
  h.apply_single_qubit(0, hadamard_gate());
  CHECK(fidelity(h, Statevector(1)) > 1.0 - 1e-12);

  Statevector flip(1);
  flip.apply_single_qubit(0, rot_y(std::numbers::pi));
  CHECK(std::abs(flip[1]) == doctest::Approx(1.0).epsilon(1e-12));

  Statevector phase(1);
  phase.apply_single_qubit(0, rot_z(0.8));
  CHECK(std::abs(phase[0] - std::polar(1.0, -0.4)) < 1e-12);
}

TEST_CASE("single-qubit application rejects bad input") {
  Statevector psi(2);
  CHECK_THROWS_AS(psi.apply_single_qubit(2, pauli_x_gate()), std::invalid_argument);
  CHECK_THROWS_AS(psi.apply_single_qubit(0, {Complex(2.0, 0.0), Complex(0.0, 0.0),
                                             Complex(0.0, 0.0), Complex(2.0, 0.0)}),
                  std::invalid_argument);
}

TEST_CASE("gate application matches the dense kron route on random states") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const int q = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    Statevector psi = random_state(n, rng);
    const Eigen::VectorXcd before = oracle::to_eigen(psi);

    // Random unitary from two rotations.
    const Mat2 u = mat_mul(rot_y(rng.uniform_in(-3.0, 3.0)),
                           rot_z(rng.uniform_in(-3.0, 3.0)));
    psi.apply_single_qubit(q, u);

    Eigen::Matrix2cd ue;
    ue << u.a, u.b, u.c, u.d;
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Ones(1, 1);
    for (int k = n - 1; k >= 0; --k) {
      full = oracle::kron(full, k == q ? Eigen::MatrixXcd(ue)
                                       : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));
    }
    const Eigen::VectorXcd expect = full * before;
    const Eigen::VectorXcd got = oracle::to_eigen(psi);
    CHECK((expect - got).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("controlled-Z flips only the doubly excited amplitudes") {
  Statevector psi(2);
  psi.apply_single_qubit(0, hadamard_gate());
  psi.apply_single_qubit(1, hadamard_gate());
  psi.apply_cz(0, 1);
  CHECK(std::abs(psi[0] - Complex(0.5, 0.0)) < 1e-12);
  CHECK(std::abs(psi[1] - Complex(0.5, 0.0)) < 1e-12);
  CHECK(std::abs(psi[2] - Complex(0.5, 0.0)) < 1e-12);
  CHECK(std::abs(psi[3] - Complex(-0.5, 0.0)) < 1e-12);
  psi.apply_cz(1, 0);  // symmetric, applying twice restores the state
  CHECK(std::abs(psi[3] - Complex(0.5, 0.0)) < 1e-12);
  CHECK_THROWS_AS(psi.apply_cz(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(psi.apply_cz(0, 2), std::invalid_argument);
}

TEST_CASE("probabilities and measurement collapse behave like Born sampling") {
  Statevector psi = Statevector::product_state({{1.0, 0.0, 0.0}});
  CHECK(psi.probability_one(0) == doctest::Approx(0.5).epsilon(1e-12));

  SUBCASE("deterministic outcomes on basis states") {
    Rng rng(3);
    Statevector zero(1);
    CHECK(zero.measure_qubit(0, rng) == 0);
    Statevector one(1);
    one.apply_single_qubit(0, pauli_x_gate());
    CHECK(one.measure_qubit(0, rng) == 1);
  }

  SUBCASE("collapse renormalizes and freezes the measured qubit") {
    Rng rng(17);
    Statevector s = Statevector::product_state({{1.0, 0.0, 0.0}, {0.6, 0.0, 0.8}});
    const int outcome = s.measure_qubit(0, rng);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.probability_one(0) == doctest::Approx(outcome == 1 ? 1.0 : 0.0).epsilon(1e-12));
    // Second measurement must repeat the first outcome.
    CHECK(s.measure_qubit(0, rng) == outcome);
  }

  SUBCASE("seeded measurement streams are reproducible") {
    Rng rng_a(99);
    Rng rng_b(99);
    Statevector a = Statevector::product_state({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
    Statevector b = Statevector::product_state({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
    CHECK(a.measure_qubit(0, rng_a) == b.measure_qubit(0, rng_b));
    CHECK(a.measure_qubit(1, rng_a) == b.measure_qubit(1, rng_b));
  }

  SUBCASE("empirical frequency tracks the Born rule") {
    int ones = 0;
    for (int k = 0; k < 4000; ++k) {
      Rng rng(1000 + static_cast<std::uint64_t>(k));
      Statevector s = Statevector::product_state({{1.0, 0.0, 0.0}});
      ones += s.measure_qubit(0, rng);
    }
    CHECK(ones > 1800);
    CHECK(ones < 2200);  // ~4230 would be 6.7 sigma out
  }
}

TEST_CASE("fidelity compares states through their overlap") {
  const Statevector a(2);
  Statevector b(2);
  CHECK(fidelity(a, b) == doctest::Approx(1.0));
  b.apply_single_qubit(0, pauli_x_gate());
  CHECK(fidelity(a, b) == doctest::Approx(0.0));
  b.apply_single_qubit(0, hadamard_gate());
  CHECK(fidelity(a, b) == doctest::Approx(0.5).epsilon(1e-12));
}
