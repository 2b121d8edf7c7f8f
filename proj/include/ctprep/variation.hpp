#pragma once

// Crossover and mutation operators over variable-length gate lists.

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "ctprep/circuit.hpp"

namespace ctprep {

enum class CrossoverMethod { one_point, two_point, messy_one_point, uniform };

inline constexpr std::array<std::pair<CrossoverMethod, std::string_view>, 4> kCrossoverNames{{
    {CrossoverMethod::one_point, "one_point"},
    {CrossoverMethod::two_point, "two_point"},
    {CrossoverMethod::messy_one_point, "messy_one_point"},
    {CrossoverMethod::uniform, "uniform"},
}};

inline std::string_view to_string(CrossoverMethod m) {
  for (const auto& [v, name] : kCrossoverNames)
    if (v == m) return name;
  return "?";
}

inline std::optional<CrossoverMethod> parse_crossover(std::string_view s) {
  for (const auto& [v, name] : kCrossoverNames)
    if (name == s) return v;
  return std::nullopt;
}

namespace detail {

using gate_list = std::vector<Gate>;

inline gate_list splice(const gate_list& head_src, std::size_t head_end, const gate_list& tail_src,
                        std::size_t tail_begin) {
  gate_list out;
  out.reserve(head_end + (tail_src.size() - tail_begin));
  out.insert(out.end(), head_src.begin(), head_src.begin() + static_cast<long>(head_end));
  out.insert(out.end(), tail_src.begin() + static_cast<long>(tail_begin), tail_src.end());
  return out;
}

template <class URBG>
std::size_t uniform_index(std::size_t lo, std::size_t hi, URBG& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace detail

/// Cut at each parent's midpoint and exchange tails.
inline std::pair<Circuit, Circuit> one_point_crossover(const Circuit& a, const Circuit& b) {
  const std::size_t ca = a.size() / 2;
  const std::size_t cb = b.size() / 2;
  return {Circuit(a.qubits(), detail::splice(a.gates(), ca, b.gates(), cb)),
          Circuit(b.qubits(), detail::splice(b.gates(), cb, a.gates(), ca))};
}

/// Independent random cut pair i <= j in each parent; middle segments are exchanged.
template <class URBG>
std::pair<Circuit, Circuit> two_point_crossover(const Circuit& a, const Circuit& b, URBG& rng) {
  auto cuts = [&](std::size_t len) {
    std::size_t i = detail::uniform_index(0, len, rng);
    std::size_t j = detail::uniform_index(0, len, rng);
    if (i > j) std::swap(i, j);
    return std::pair{i, j};
  };
  const auto [ia, ja] = cuts(a.size());
  const auto [ib, jb] = cuts(b.size());
  auto build = [](const detail::gate_list& outer, std::size_t i, std::size_t j,
                  const detail::gate_list& inner, std::size_t k, std::size_t l) {
    detail::gate_list out;
    out.reserve(outer.size() - (j - i) + (l - k));
    out.insert(out.end(), outer.begin(), outer.begin() + static_cast<long>(i));
    out.insert(out.end(), inner.begin() + static_cast<long>(k), inner.begin() + static_cast<long>(l));
    out.insert(out.end(), outer.begin() + static_cast<long>(j), outer.end());
    return out;
  };
  return {Circuit(a.qubits(), build(a.gates(), ia, ja, b.gates(), ib, jb)),
          Circuit(b.qubits(), build(b.gates(), ib, jb, a.gates(), ia, ja))};
}

/// Independent random cut in each parent; tails exchanged. Child lengths vary.
template <class URBG>
std::pair<Circuit, Circuit> messy_one_point_crossover(const Circuit& a, const Circuit& b, URBG& rng) {
  const std::size_t ca = detail::uniform_index(0, a.size(), rng);
  const std::size_t cb = detail::uniform_index(0, b.size(), rng);
  return {Circuit(a.qubits(), detail::splice(a.gates(), ca, b.gates(), cb)),
          Circuit(b.qubits(), detail::splice(b.gates(), cb, a.gates(), ca))};
}

/// Position-wise swap with probability `swap_probability` over the common prefix.
template <class URBG>
std::pair<Circuit, Circuit> uniform_crossover(const Circuit& a, const Circuit& b, URBG& rng,
                                              double swap_probability = 0.5) {
  Circuit x = a;
  Circuit y = b;
  std::bernoulli_distribution swap(swap_probability);
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i)
    if (swap(rng)) std::swap(x.gates()[i], y.gates()[i]);
  return {std::move(x), std::move(y)};
}

template <class URBG>
std::pair<Circuit, Circuit> crossover(CrossoverMethod method, const Circuit& a, const Circuit& b,
                                      URBG& rng) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("crossover: parents differ in qubit count");
  switch (method) {
    case CrossoverMethod::one_point: return one_point_crossover(a, b);
    case CrossoverMethod::two_point: return two_point_crossover(a, b, rng);
    case CrossoverMethod::messy_one_point: return messy_one_point_crossover(a, b, rng);
    case CrossoverMethod::uniform: return uniform_crossover(a, b, rng);
  }
  throw std::invalid_argument("crossover: unknown method");
}

// --- mutation --------------------------------------------------------------

enum class MutationOp {
  gate_positioning,
  gate_addition,
  gate_deletion,
  switching,
  sequence_insertion,
  sequence_deletion,
  circuit_optimization,
};

inline constexpr std::size_t kMutationOpCount = 7;
inline constexpr std::size_t kMaxSequenceLength = 25;

inline std::string_view to_string(MutationOp op) {
  switch (op) {
    case MutationOp::gate_positioning: return "gate_positioning";
    case MutationOp::gate_addition: return "gate_addition";
    case MutationOp::gate_deletion: return "gate_deletion";
    case MutationOp::switching: return "switching";
    case MutationOp::sequence_insertion: return "sequence_insertion";
    case MutationOp::sequence_deletion: return "sequence_deletion";
    case MutationOp::circuit_optimization: return "circuit_optimization";
  }
  return "?";
}

/// Applies `op` to `c` in place and returns the operator actually applied.
/// Operators that need an existing gate fall back to gate_addition on an
/// empty circuit.
template <class URBG>
MutationOp apply_mutation(MutationOp op, Circuit& c, URBG& rng) {
  auto& g = c.gates();
  const int n = c.qubits();
  const bool needs_gate = op == MutationOp::gate_positioning || op == MutationOp::gate_deletion ||
                          op == MutationOp::switching || op == MutationOp::sequence_deletion;
  if (needs_gate && g.empty()) op = MutationOp::gate_addition;

  switch (op) {
    case MutationOp::gate_positioning: {
      Gate& target = g[detail::uniform_index(0, g.size() - 1, rng)];
      target.qubits = random_operands(target.kind, n, rng);
      break;
    }
    case MutationOp::gate_addition: {
      const std::size_t at = detail::uniform_index(0, g.size(), rng);
      g.insert(g.begin() + static_cast<long>(at), random_gate(n, rng));
      break;
    }
    case MutationOp::gate_deletion:
      g.erase(g.begin() + static_cast<long>(detail::uniform_index(0, g.size() - 1, rng)));
      break;
    case MutationOp::switching:
      g[detail::uniform_index(0, g.size() - 1, rng)] = random_gate(n, rng);
      break;
    case MutationOp::sequence_insertion: {
      const std::size_t len = detail::uniform_index(1, kMaxSequenceLength, rng);
      const std::size_t at = detail::uniform_index(0, g.size(), rng);
      const Circuit seq = random_circuit(n, len, rng);
      g.insert(g.begin() + static_cast<long>(at), seq.gates().begin(), seq.gates().end());
      break;
    }
    case MutationOp::sequence_deletion: {
      const std::size_t at = detail::uniform_index(0, g.size() - 1, rng);
      const std::size_t k = detail::uniform_index(1, kMaxSequenceLength, rng);
      const std::size_t count = std::min(k, g.size() - at);
      g.erase(g.begin() + static_cast<long>(at), g.begin() + static_cast<long>(at + count));
      break;
    }
    case MutationOp::circuit_optimization:
      c = optimize(c);
      break;
  }
  return op;
}

/// Applies one of the seven operators, chosen uniformly.
template <class URBG>
MutationOp mutate_in_place(Circuit& c, URBG& rng) {
  const auto op = static_cast<MutationOp>(detail::uniform_index(0, kMutationOpCount - 1, rng));
  return apply_mutation(op, c, rng);
}

template <class URBG>
Circuit mutate(Circuit c, URBG& rng) {
  mutate_in_place(c, rng);
  return c;
}

}  // namespace ctprep
