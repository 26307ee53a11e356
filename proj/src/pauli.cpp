#include "qrelax/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qrelax/statevector.hpp"

namespace qrelax {

namespace {

std::uint64_t full_mask(int num_qubits) {
  return num_qubits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_qubits) - 1;
}

std::complex<double> i_power(int e) {
  switch (e & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace

char axis_letter(Axis a) {
  switch (a) {
    case Axis::X:
      return 'X';
    case Axis::Y:
      return 'Y';
    default:
      return 'Z';
  }
}

PauliString::PauliString(int num_qubits) : PauliString(num_qubits, 0, 0) {}

PauliString::PauliString(int num_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : num_qubits_(num_qubits), x_mask_(x_mask), z_mask_(z_mask) {
  if (num_qubits_ < 1 || num_qubits_ > 64) {
    throw std::invalid_argument("pauli string supports 1 to 64 qubits");
  }
  const std::uint64_t allowed = full_mask(num_qubits_);
  if ((x_mask_ & ~allowed) != 0 || (z_mask_ & ~allowed) != 0) {
    throw std::invalid_argument("pauli mask has bits beyond the qubit count");
  }
}

PauliString PauliString::single(int num_qubits, int qubit, Axis axis) {
  if (qubit < 0 || qubit >= num_qubits) {
    throw std::invalid_argument("qubit index out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (axis) {
    case Axis::X:
      return PauliString(num_qubits, bit, 0);
    case Axis::Y:
      return PauliString(num_qubits, bit, bit);
    default:
      return PauliString(num_qubits, 0, bit);
  }
}

PauliString PauliString::parse(const std::string& text) {
  const int n = static_cast<int>(text.size());
  if (n < 1 || n > 64) {
    throw std::invalid_argument("pauli string supports 1 to 64 qubits");
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw std::invalid_argument(std::string("bad pauli letter '") + text[q] + "'");
    }
  }
  return PauliString(n, x, z);
}

int PauliString::weight() const { return std::popcount(x_mask_ | z_mask_); }

char PauliString::letter(int qubit) const {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  const bool x = (x_mask_ >> qubit) & 1u;
  const bool z = (z_mask_ >> qubit) & 1u;
  if (x && z) {
    return 'Y';
  }
  if (x) {
    return 'X';
  }
  if (z) {
    return 'Z';
  }
  return 'I';
}

std::string PauliString::to_string() const {
  std::string out(num_qubits_, 'I');
  for (int q = 0; q < num_qubits_; ++q) {
    out[q] = letter(q);
  }
  return out;
}

PauliString single_axis_pauli(int num_qubits, int qubit, Axis axis) {
  return PauliString::single(num_qubits, qubit, axis);
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("pauli product needs matching qubit counts");
  }
  // Per qubit, with P(x,z) = i^{xz} X^x Z^z:
  // P(ax,az) P(bx,bz) = i^{ax*az + bx*bz + 2*az*bx - cx*cz} P(cx,cz),
  // where (cx,cz) = (ax^bx, az^bz). Exponents accumulate mod 4.
  const std::uint64_t cx = a.x_mask() ^ b.x_mask();
  const std::uint64_t cz = a.z_mask() ^ b.z_mask();
  int exponent = 0;
  exponent += std::popcount(a.x_mask() & a.z_mask());
  exponent += std::popcount(b.x_mask() & b.z_mask());
  exponent += 2 * std::popcount(a.z_mask() & b.x_mask());
  exponent -= std::popcount(cx & cz);
  return {PauliString(a.num_qubits(), cx, cz), i_power(exponent)};
}

double expectation(const PauliString& p, const Statevector& psi) {
  if (p.num_qubits() != psi.num_qubits()) {
    throw std::invalid_argument("pauli and state qubit counts differ");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("state must be normalized");
  }
  // P|b> = i^{popcount(x&z)} (-1)^{popcount(b&z)} |b xor x>.
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const auto& amps = psi.amplitudes();
  std::complex<double> acc = 0.0;
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
    acc += std::conj(amps[b ^ x]) * amps[b] * sign;
  }
  acc *= i_power(std::popcount(x & z));
  if (std::abs(acc.imag()) > 1e-9) {
    throw std::logic_error("pauli expectation has a non-real residue");
  }
  return acc.real();
}

}  // namespace qrelax
