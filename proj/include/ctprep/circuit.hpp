#pragma once

// Circuit genome: an ordered list of Clifford+T gates over n qubits.

#include <algorithm>
#include <array>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace ctprep {

enum class GateKind : unsigned char { H, S, T, CNOT };

inline constexpr std::string_view gate_name(GateKind k) noexcept {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

inline constexpr int arity(GateKind k) noexcept { return k == GateKind::CNOT ? 2 : 1; }

/// One gene. For CNOT, qubits = {control, target}; single-qubit gates use qubits[0].
struct Gate {
  GateKind kind = GateKind::H;
  std::array<int, 2> qubits{0, 0};

  static constexpr Gate h(int q) noexcept { return {GateKind::H, {q, 0}}; }
  static constexpr Gate s(int q) noexcept { return {GateKind::S, {q, 0}}; }
  static constexpr Gate t(int q) noexcept { return {GateKind::T, {q, 0}}; }
  static constexpr Gate cnot(int control, int target) noexcept {
    return {GateKind::CNOT, {control, target}};
  }

  constexpr bool acts_on(int q) const noexcept {
    return qubits[0] == q || (kind == GateKind::CNOT && qubits[1] == q);
  }

  friend constexpr bool operator==(const Gate& a, const Gate& b) noexcept {
    if (a.kind != b.kind || a.qubits[0] != b.qubits[0]) return false;
    return a.kind != GateKind::CNOT || a.qubits[1] == b.qubits[1];
  }
  // Ordering used only for multiset comparisons in tests and tooling.
  friend constexpr bool operator<(const Gate& a, const Gate& b) noexcept {
    const int a1 = a.kind == GateKind::CNOT ? a.qubits[1] : 0;
    const int b1 = b.kind == GateKind::CNOT ? b.qubits[1] : 0;
    return std::tie(a.kind, a.qubits[0], a1) < std::tie(b.kind, b.qubits[0], b1);
  }
};

inline std::string to_string(const Gate& g) {
  std::string s(gate_name(g.kind));
  s += " q" + std::to_string(g.qubits[0]);
  if (g.kind == GateKind::CNOT) s += ",q" + std::to_string(g.qubits[1]);
  return s;
}

inline void validate_gate(const Gate& g, int n) {
  for (int i = 0; i < arity(g.kind); ++i)
    if (g.qubits[i] < 0 || g.qubits[i] >= n)
      throw std::invalid_argument("gate " + to_string(g) + " addresses a qubit outside [0, " +
                                  std::to_string(n) + ")");
  if (g.kind == GateKind::CNOT && g.qubits[0] == g.qubits[1])
    throw std::invalid_argument("gate " + to_string(g) + " has control equal to target");
}

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n) : n_(n) {}
  Circuit(int n, std::vector<Gate> gates) : n_(n), gates_(std::move(gates)) {}

  int qubits() const noexcept { return n_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::vector<Gate>& gates() noexcept { return gates_; }

  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  void push_back(const Gate& g) { gates_.push_back(g); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_ = 1;
  std::vector<Gate> gates_;
};

inline void validate_circuit(const Circuit& c) {
  if (c.qubits() < 1) throw std::invalid_argument("circuit must have at least one qubit");
  for (const Gate& g : c.gates()) validate_gate(g, c.qubits());
}

// --- random generation -----------------------------------------------------

/// Operands for `kind`, uniform over (distinct) qubits.
template <class URBG>
std::array<int, 2> random_operands(GateKind kind, int n, URBG& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int first = pick(rng);
  if (kind != GateKind::CNOT) return {first, 0};
  int second = std::uniform_int_distribution<int>(0, n - 2)(rng);
  if (second >= first) ++second;
  return {first, second};
}

/// Uniform over admissible kinds; CNOT is excluded on a single qubit.
template <class URBG>
Gate random_gate(int n, URBG& rng) {
  if (n < 1) throw std::invalid_argument("random_gate: qubit count must be >= 1");
  const int kinds = n == 1 ? 3 : 4;
  const auto kind = static_cast<GateKind>(std::uniform_int_distribution<int>(0, kinds - 1)(rng));
  return Gate{kind, random_operands(kind, n, rng)};
}

template <class URBG>
Circuit random_circuit(int n, std::size_t length, URBG& rng) {
  Circuit c(n);
  c.gates().reserve(length);
  for (std::size_t i = 0; i < length; ++i) c.push_back(random_gate(n, rng));
  return c;
}

// --- metrics ---------------------------------------------------------------

inline std::size_t gate_count(const Circuit& c) noexcept { return c.size(); }

inline std::size_t t_count(const Circuit& c) noexcept {
  return static_cast<std::size_t>(std::count_if(
      c.gates().begin(), c.gates().end(), [](const Gate& g) { return g.kind == GateKind::T; }));
}

/// Layer count of the as-soon-as-possible schedule.
inline std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> layer(static_cast<std::size_t>(std::max(c.qubits(), 1)), 0);
  std::size_t deepest = 0;
  for (const Gate& g : c.gates()) {
    std::size_t at = layer[g.qubits[0]];
    if (g.kind == GateKind::CNOT) at = std::max(at, layer[g.qubits[1]]);
    ++at;
    layer[g.qubits[0]] = at;
    if (g.kind == GateKind::CNOT) layer[g.qubits[1]] = at;
    deepest = std::max(deepest, at);
  }
  return deepest;
}

// --- identity cancellation -------------------------------------------------

/// Rewrites HH -> e, CNOT(c,t)CNOT(c,t) -> e, SSSS -> e and TT -> S to a
/// fixpoint. Two gates are adjacent when no gate between them touches a
/// qubit they share. No commutation is attempted.
///
/// Works as a single left-to-right pass that keeps the output irreducible:
/// each incoming gate can only pair with the most recent surviving gate on
/// its wires, and removing the tail of a wire never creates a new adjacency
/// among earlier gates.
inline Circuit optimize(const Circuit& c) {
  const int n = c.qubits();
  std::vector<Gate> out;
  std::vector<bool> alive;
  out.reserve(c.size());
  alive.reserve(c.size());
  // per-wire stack of indices into `out`
  std::vector<std::vector<std::size_t>> wire(static_cast<std::size_t>(std::max(n, 1)));

  auto top = [&](int q, std::size_t depth_from_top) -> const Gate* {
    const auto& w = wire[q];
    if (w.size() <= depth_from_top) return nullptr;
    return &out[w[w.size() - 1 - depth_from_top]];
  };
  auto pop = [&](int q) {
    alive[wire[q].back()] = false;
    wire[q].pop_back();
  };
  auto push = [&](const Gate& g) {
    out.push_back(g);
    alive.push_back(true);
    wire[g.qubits[0]].push_back(out.size() - 1);
    if (g.kind == GateKind::CNOT) wire[g.qubits[1]].push_back(out.size() - 1);
  };

  std::vector<Gate> pending;
  for (const Gate& incoming : c.gates()) {
    pending.push_back(incoming);
    while (!pending.empty()) {
      const Gate g = pending.back();
      pending.pop_back();
      const int q = g.qubits[0];
      switch (g.kind) {
        case GateKind::H:
          if (const Gate* p = top(q, 0); p && *p == g) pop(q);
          else push(g);
          break;
        case GateKind::T:
          if (const Gate* p = top(q, 0); p && *p == g) {
            pop(q);
            pending.push_back(Gate::s(q));
          } else {
            push(g);
          }
          break;
        case GateKind::S: {
          const Gate* p0 = top(q, 0);
          const Gate* p1 = top(q, 1);
          const Gate* p2 = top(q, 2);
          if (p0 && p1 && p2 && *p0 == g && *p1 == g && *p2 == g) {
            pop(q);
            pop(q);
            pop(q);
          } else {
            push(g);
          }
          break;
        }
        case GateKind::CNOT: {
          const int t = g.qubits[1];
          if (!wire[q].empty() && !wire[t].empty() && wire[q].back() == wire[t].back() &&
              out[wire[q].back()] == g) {
            alive[wire[q].back()] = false;
            wire[q].pop_back();
            wire[t].pop_back();
          } else {
            push(g);
          }
          break;
        }
      }
    }
  }

  Circuit result(n);
  result.gates().reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (alive[i]) result.push_back(out[i]);
  return result;
}

}  // namespace ctprep
