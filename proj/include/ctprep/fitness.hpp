#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>

#include "ctprep/circuit.hpp"
#include "ctprep/statevec.hpp"

namespace ctprep {

/// Objectives in priority order: fidelity (maximize), gate count and T-count
/// (minimize). Later objectives matter only on exact ties of earlier ones.
struct Fitness {
  double fidelity = 0.0;
  std::size_t gate_count = 0;
  std::size_t t_count = 0;

  friend bool operator==(const Fitness&, const Fitness&) = default;
};

/// Three-way comparison in "goodness": greater means fitter.
inline std::strong_ordering compare(const Fitness& a, const Fitness& b) noexcept {
  if (a.fidelity != b.fidelity)
    return a.fidelity > b.fidelity ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.gate_count != b.gate_count) return b.gate_count <=> a.gate_count;
  return b.t_count <=> a.t_count;
}

inline bool beats(const Fitness& a, const Fitness& b) noexcept { return compare(a, b) > 0; }

inline std::ostream& operator<<(std::ostream& os, const Fitness& f) {
  return os << "(" << f.fidelity << ", " << f.gate_count << ", " << f.t_count << ")";
}

inline Fitness evaluate(const Circuit& genome, const StateVector& target) {
  if (genome.qubits() != target.qubits())
    throw std::invalid_argument("evaluate: circuit has " + std::to_string(genome.qubits()) +
                                " qubits but target has " + std::to_string(target.qubits()));
  return {fidelity(simulate(genome), target), gate_count(genome), t_count(genome)};
}

struct Individual {
  Circuit genome;
  std::optional<Fitness> fitness;

  Individual() = default;
  explicit Individual(Circuit c) : genome(std::move(c)) {}

  const Fitness& fit() const {
    if (!fitness) throw std::logic_error("individual has not been evaluated");
    return *fitness;
  }
};

}  // namespace ctprep
