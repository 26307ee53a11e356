#include "qrelax/shadows.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qrelax/rng.hpp"

namespace qrelax {

namespace {

// Maps the measured axis' eigenbasis onto the computational basis.
Mat2 frame_rotation(Axis axis) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (axis) {
    case Axis::X:
      return hadamard_gate();
    case Axis::Y:
      return {{r, 0}, {0, -r}, {r, 0}, {0, r}};
    default:
      return {1, 0, 0, 1};
  }
}

void check_budget(double epsilon, double delta, int num_edges) {
  if (epsilon <= 0.0 || delta <= 0.0 || delta >= 1.0 || num_edges < 1) {
    throw std::invalid_argument("budget needs epsilon > 0, delta in (0,1), edges >= 1");
  }
}

long long ceil_to_count(double value) {
  return static_cast<long long>(std::ceil(value));
}

}  // namespace

std::vector<ShadowRecord> collect_shadows(const Statevector& psi, int shots,
                                          std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("shadow collection needs at least one shot");
  }
  const int n = psi.num_qubits();
  std::vector<ShadowRecord> records;
  records.reserve(shots);
  for (int shot = 0; shot < shots; ++shot) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(shot));
    Statevector work = psi;
    ShadowRecord record;
    record.bases.reserve(n);
    record.outcomes.reserve(n);
    for (int q = 0; q < n; ++q) {
      const Axis axis = static_cast<Axis>(rng.below(3));
      work.apply_single_qubit(q, frame_rotation(axis));
      const int bit = work.measure_qubit(q, rng);
      record.bases.push_back(axis);
      record.outcomes.push_back(bit == 0 ? 1 : -1);
    }
    records.push_back(std::move(record));
  }
  return records;
}

double single_shot_estimate(const ShadowRecord& record, const PauliString& p) {
  const int weight = p.weight();
  if (weight < 1 || weight > 2) {
    throw std::invalid_argument("estimator supports weight 1 and 2 operators only");
  }
  if (static_cast<int>(record.bases.size()) != p.num_qubits()) {
    throw std::invalid_argument("record and operator qubit counts differ");
  }
  double product = 1.0;
  for (int q = 0; q < p.num_qubits(); ++q) {
    const char letter = p.letter(q);
    if (letter == 'I') {
      continue;
    }
    if (axis_letter(record.bases[q]) != letter) {
      return 0.0;  // basis mismatch voids the whole snapshot
    }
    product *= 3.0 * record.outcomes[q];
  }
  return product;
}

double estimate_pauli(const std::vector<ShadowRecord>& records, const PauliString& p) {
  if (records.empty()) {
    throw std::invalid_argument("estimator needs at least one shot");
  }
  double total = 0.0;
  for (const ShadowRecord& record : records) {
    total += single_shot_estimate(record, p);
  }
  return total / static_cast<double>(records.size());
}

double estimate_hamiltonian(const std::vector<ShadowRecord>& records,
                            const RelaxedHamiltonian& h) {
  if (records.empty()) {
    throw std::invalid_argument("estimator needs at least one shot");
  }
  double value = h.constant();
  for (const HamiltonianTerm& t : h.terms()) {
    value += t.coeff * estimate_pauli(records, t.op);
  }
  return value;
}

long long samples_multiplicative(const SampleBudget& b) {
  check_budget(b.epsilon, b.delta, b.num_edges);
  return ceil_to_count(162.0 / (b.epsilon * b.epsilon) *
                       std::log(2.0 * b.num_edges / b.delta));
}

long long samples_additive(double epsilon, double delta, int num_edges) {
  check_budget(epsilon, delta, num_edges);
  const double edges = num_edges;
  return ceil_to_count(81.0 / (2.0 * epsilon * epsilon) * edges * edges *
                       std::log(2.0 * edges / delta));
}

long long samples_embedded(int num_edges, double delta) {
  check_budget(1.0, delta, num_edges);
  return ceil_to_count(162.0 * std::log(2.0 * num_edges / delta));
}

void write_shadows_csv(const std::vector<ShadowRecord>& records, std::ostream& out) {
  out << "shot,qubit,basis,outcome\n";
  for (std::size_t shot = 0; shot < records.size(); ++shot) {
    const ShadowRecord& record = records[shot];
    for (std::size_t q = 0; q < record.bases.size(); ++q) {
      out << shot << ',' << q << ',' << axis_letter(record.bases[q]) << ','
          << record.outcomes[q] << "\n";
    }
  }
}

}  // namespace qrelax
