#include "qrelax/encoding.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qrelax/pauli.hpp"

namespace qrelax {

namespace {

// Axis cycle per deformation; vertices fill these slots in order.
std::array<Axis, 3> axis_cycle(int deformation) {
  switch (deformation) {
    case 1:
      return {Axis::Z, Axis::Z, Axis::Z};
    case 2:
      return {Axis::X, Axis::Z, Axis::Z};
    default:
      return {Axis::X, Axis::Y, Axis::Z};
  }
}

void check_deformation(int d) {
  if (d < 1 || d > 3) {
    throw std::invalid_argument("deformation must be 1, 2 or 3");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

VertexPauliMap::VertexPauliMap(int deformation, int num_qubits,
                               std::vector<VertexPauli> vertex_ops, Coloring coloring)
    : deformation_(deformation),
      num_qubits_(num_qubits),
      vertex_ops_(std::move(vertex_ops)),
      coloring_(std::move(coloring)) {
  check_deformation(deformation_);
  if (num_qubits_ < 1) {
    throw std::invalid_argument("encoding needs at least one qubit");
  }
  if (vertex_ops_.size() != coloring_.color_of.size()) {
    throw std::invalid_argument("vertex operators and coloring sizes differ");
  }
  for (const VertexPauli& vp : vertex_ops_) {
    if (vp.qubit < 0 || vp.qubit >= num_qubits_) {
      throw std::invalid_argument("vertex operator qubit out of range");
    }
  }
}

PauliString VertexPauliMap::vertex_pauli(int v) const {
  const VertexPauli& vp = vertex_ops_.at(v);
  return single_axis_pauli(num_qubits_, vp.qubit, vp.axis);
}

VertexPauliMap assign_paulis(const Graph& g, const Coloring& coloring, int deformation) {
  check_deformation(deformation);
  const int n = g.num_vertices();
  if (static_cast<int>(coloring.color_of.size()) != n || coloring.num_colors < 1) {
    throw std::invalid_argument("coloring does not match the graph");
  }
  for (const Edge& e : g.edges()) {
    if (coloring.color_of[e.u] == coloring.color_of[e.v]) {
      throw std::invalid_argument("coloring is not proper");
    }
  }
  std::vector<std::vector<int>> classes(coloring.num_colors);
  for (int v = 0; v < n; ++v) {
    const int c = coloring.color_of[v];
    if (c < 0 || c >= coloring.num_colors) {
      throw std::invalid_argument("color index out of range");
    }
    classes[c].push_back(v);  // vertex indices ascend within each class
  }
  const std::array<Axis, 3> cycle = axis_cycle(deformation);
  std::vector<VertexPauli> ops(n);
  int qubit_base = 0;
  for (const std::vector<int>& members : classes) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      ops[members[j]] = {qubit_base + static_cast<int>(j) / deformation,
                         cycle[j % deformation]};
    }
    qubit_base += static_cast<int>((members.size() + deformation - 1) / deformation);
  }
  return VertexPauliMap(deformation, qubit_base, std::move(ops), coloring);
}

RelaxedHamiltonian::RelaxedHamiltonian(int num_qubits, double constant,
                                       std::vector<HamiltonianTerm> terms)
    : num_qubits_(num_qubits), constant_(constant), terms_(std::move(terms)) {
  if (num_qubits_ < 1) {
    throw std::invalid_argument("hamiltonian needs at least one qubit");
  }
  if (!std::isfinite(constant_)) {
    throw std::invalid_argument("hamiltonian constant must be finite");
  }
  for (const HamiltonianTerm& t : terms_) {
    if (t.op.num_qubits() != num_qubits_) {
      throw std::invalid_argument("term qubit count does not match the hamiltonian");
    }
    if (!std::isfinite(t.coeff)) {
      throw std::invalid_argument("term coefficient must be finite");
    }
  }
}

bool RelaxedHamiltonian::is_diagonal() const {
  for (const HamiltonianTerm& t : terms_) {
    if (t.op.x_mask() != 0) {
      return false;
    }
  }
  return true;
}

void RelaxedHamiltonian::apply(const Statevector& in, Statevector& out) const {
  if (in.num_qubits() != num_qubits_ || out.num_qubits() != num_qubits_) {
    throw std::invalid_argument("state dimension does not match the hamiltonian");
  }
  const std::size_t dim = in.dim();
  for (std::size_t b = 0; b < dim; ++b) {
    out[b] = constant_ * in[b];
  }
  for (const HamiltonianTerm& t : terms_) {
    const std::uint64_t x = t.op.x_mask();
    const std::uint64_t z = t.op.z_mask();
    // i^{popcount(x&z)} is the Y-letter phase; popcount(x&z) is 0 or 1 here
    // in practice, but the general value keeps this valid for any string.
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

double RelaxedHamiltonian::diagonal_entry(std::size_t basis_index) const {
  if (!is_diagonal()) {
    throw std::logic_error("diagonal entries are only defined for Z/I hamiltonians");
  }
  double value = constant_;
  for (const HamiltonianTerm& t : terms_) {
    value += (std::popcount(basis_index & t.op.z_mask()) & 1) ? -t.coeff : t.coeff;
  }
  return value;
}

RelaxedHamiltonian build_hamiltonian(const Graph& g, const VertexPauliMap& map) {
  if (g.num_vertices() != map.num_vertices()) {
    throw std::invalid_argument("graph and encoding vertex counts differ");
  }
  const int d = map.deformation();
  std::vector<HamiltonianTerm> terms;
  terms.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    if (map[e.u].qubit == map[e.v].qubit) {
      throw std::logic_error("edge endpoints share a qubit; the coloring must keep "
                             "adjacent vertices on different qubits");
    }
    const PauliProduct prod = multiply(map.vertex_pauli(e.u), map.vertex_pauli(e.v));
    terms.push_back({-0.5 * d * e.w, prod.op});
  }
  return RelaxedHamiltonian(map.num_qubits(), 0.5 * g.total_weight(), std::move(terms));
}

Statevector embed_assignment(const VertexPauliMap& map, const Assignment& m) {
  if (static_cast<int>(m.size()) != map.num_vertices()) {
    throw std::invalid_argument("assignment length does not match the encoding");
  }
  for (int v : m) {
    if (v != 1 && v != -1) {
      throw std::invalid_argument("assignment values must be +1 or -1");
    }
  }
  const int d = map.deformation();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<std::array<double, 3>> bloch(map.num_qubits(), {0.0, 0.0, 0.0});
  std::vector<std::array<bool, 3>> filled(map.num_qubits(), {false, false, false});
  for (int v = 0; v < map.num_vertices(); ++v) {
    const VertexPauli& vp = map[v];
    bloch[vp.qubit][static_cast<int>(vp.axis)] = m[v] * scale;
    filled[vp.qubit][static_cast<int>(vp.axis)] = true;
  }
  // Unused slots in the deformation's axis cycle are dummy variables at +1.
  const std::array<Axis, 3> cycle = axis_cycle(d);
  for (int q = 0; q < map.num_qubits(); ++q) {
    for (int slot = 0; slot < d; ++slot) {
      const int axis = static_cast<int>(cycle[slot]);
      if (!filled[q][axis]) {
        bloch[q][axis] = scale;
      }
    }
  }
  return Statevector::product_state(bloch);
}

double relaxed_energy(const RelaxedHamiltonian& h, const Statevector& psi) {
  double energy = h.constant();
  for (const HamiltonianTerm& t : h.terms()) {
    energy += t.coeff * expectation(t.op, psi);
  }
  return energy;
}

void write_hamiltonian(const RelaxedHamiltonian& h, std::ostream& out) {
  out << "constant " << format_double(h.constant()) << "\n";
  for (const HamiltonianTerm& t : h.terms()) {
    out << format_double(t.coeff) << ' ' << t.op.to_string() << "\n";
  }
}

RelaxedHamiltonian read_hamiltonian(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_constant = false;
  double constant = 0.0;
  int num_qubits = -1;
  std::vector<HamiltonianTerm> terms;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) {
      continue;
    }
    if (!have_constant) {
      std::string value;
      if (first != "constant" || !(ls >> value)) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected 'constant <value>' header");
      }
      try {
        constant = std::stod(value);
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad constant '" +
                                    value + "'");
      }
      have_constant = true;
      continue;
    }
    std::string pauli_text;
    if (!(ls >> pauli_text)) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected '<coeff> <pauli>'");
    }
    double coeff = 0.0;
    try {
      coeff = std::stod(first);
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": bad coefficient '" +
                                  first + "'");
    }
    try {
      terms.push_back({coeff, PauliString::parse(pauli_text)});
    } catch (const std::exception& ex) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + ex.what());
    }
    const int term_qubits = terms.back().op.num_qubits();
    if (num_qubits < 0) {
      num_qubits = term_qubits;
    } else if (term_qubits != num_qubits) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": pauli length differs from earlier terms");
    }
  }
  if (!have_constant) {
    throw std::invalid_argument("hamiltonian text is missing the 'constant' header");
  }
  if (num_qubits < 0) {
    throw std::invalid_argument("hamiltonian text has no terms");
  }
  return RelaxedHamiltonian(num_qubits, constant, std::move(terms));
}

}  // namespace qrelax
