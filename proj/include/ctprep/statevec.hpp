#pragma once

// Dense pure-state simulation over the Clifford+T gate set.
//
// Qubit k addresses bit k of the basis-state index (qubit 0 is the least
// significant bit). The same convention is used by the target builders and
// the QASM emitter.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctprep/circuit.hpp"

namespace ctprep {

using amplitude = std::complex<double>;

/// Upper bound on register width accepted by zero_state (2^24 amplitudes = 256 MiB).
inline constexpr int kMaxQubits = 24;

class StateVector {
 public:
  StateVector() = default;

  /// Takes ownership of an amplitude buffer whose length must be 2^n.
  StateVector(int n, std::vector<amplitude> amps) : n_(n), amps_(std::move(amps)) {
    if (n < 1 || n > kMaxQubits)
      throw std::invalid_argument("StateVector: qubit count " + std::to_string(n) + " out of range");
    if (amps_.size() != (std::size_t{1} << n))
      throw std::invalid_argument("StateVector: amplitude count does not equal 2^n");
  }

  int qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return amps_.size(); }

  std::span<const amplitude> amps() const noexcept { return amps_; }
  std::span<amplitude> amps() noexcept { return amps_; }

  const amplitude& operator[](std::size_t i) const { return amps_[i]; }
  amplitude& operator[](std::size_t i) { return amps_[i]; }

  double norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto& a : amps_) acc += std::norm(a);
    return acc;
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int n_ = 0;
  std::vector<amplitude> amps_;
};

inline StateVector zero_state(int n, int max_qubits = kMaxQubits) {
  if (n < 1 || n > max_qubits)
    throw std::invalid_argument("zero_state: qubit count " + std::to_string(n) + " outside [1, " +
                                std::to_string(max_qubits) + "]");
  std::vector<amplitude> amps(std::size_t{1} << n);
  amps[0] = 1.0;
  return StateVector(n, std::move(amps));
}

namespace kernels {

// In-place amplitude-pair kernels. Callers guarantee operands are in range.

inline void hadamard(std::span<amplitude> psi, int q) noexcept {
  constexpr double r = 0.70710678118654752440;
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < psi.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const amplitude a0 = psi[i];
      const amplitude a1 = psi[i + stride];
      psi[i] = r * (a0 + a1);
      psi[i + stride] = r * (a0 - a1);
    }
  }
}

/// Multiplies every amplitude whose bit q is set by `phase`.
inline void phase(std::span<amplitude> psi, int q, amplitude phase) noexcept {
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = stride; base < psi.size(); base += 2 * stride)
    for (std::size_t i = base; i < base + stride; ++i) psi[i] *= phase;
}

/// S = diag(1, i): multiplication by i is an exact component swap.
inline void s_gate(std::span<amplitude> psi, int q) noexcept {
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = stride; base < psi.size(); base += 2 * stride)
    for (std::size_t i = base; i < base + stride; ++i) psi[i] = {-psi[i].imag(), psi[i].real()};
}

inline void t_gate(std::span<amplitude> psi, int q) noexcept {
  constexpr double r = 0.70710678118654752440;
  phase(psi, q, amplitude{r, r});
}

inline void cnot(std::span<amplitude> psi, int control, int target) noexcept {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < psi.size(); ++i)
    if ((i & cmask) && !(i & tmask)) std::swap(psi[i], psi[i | tmask]);
}

inline void apply(std::span<amplitude> psi, const Gate& g) noexcept {
  switch (g.kind) {
    case GateKind::H: hadamard(psi, g.qubits[0]); break;
    case GateKind::S: s_gate(psi, g.qubits[0]); break;
    case GateKind::T: t_gate(psi, g.qubits[0]); break;
    case GateKind::CNOT: cnot(psi, g.qubits[0], g.qubits[1]); break;
  }
}

}  // namespace kernels

inline void apply_gate(StateVector& state, const Gate& gate) {
  validate_gate(gate, state.qubits());
  kernels::apply(state.amps(), gate);
}

inline StateVector simulate(const Circuit& circuit) {
  validate_circuit(circuit);
  StateVector state = zero_state(circuit.qubits());
  for (const Gate& g : circuit.gates()) kernels::apply(state.amps(), g);
  return state;
}

/// |<a|b>|^2, clamped to [0, 1]. Exactly symmetric in its arguments.
inline double fidelity(const StateVector& a, const StateVector& b) {
  if (a.qubits() != b.qubits())
    throw std::invalid_argument("fidelity: states have " + std::to_string(a.qubits()) + " and " +
                                std::to_string(b.qubits()) + " qubits");
  double re = 0.0;
  double im = 0.0;
  const auto x = a.amps();
  const auto y = b.amps();
  for (std::size_t i = 0; i < x.size(); ++i) {
    // conj(x) * y, written out so swapping arguments negates im exactly
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  const double f = re * re + im * im;
  return f > 1.0 ? 1.0 : (f < 0.0 ? 0.0 : f);
}

}  // namespace ctprep
