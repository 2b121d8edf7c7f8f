#pragma once

// Survivor selection. best, worst and best_duplication rank by the full
// lexicographic fitness; roulette and tournament look at fidelity only.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "ctprep/fitness.hpp"

namespace ctprep {

enum class SelectionMethod { best, worst, random, roulette, tournament, best_duplication };

inline constexpr std::array<std::pair<SelectionMethod, std::string_view>, 6> kSelectionNames{{
    {SelectionMethod::best, "best"},
    {SelectionMethod::worst, "worst"},
    {SelectionMethod::random, "random"},
    {SelectionMethod::roulette, "roulette"},
    {SelectionMethod::tournament, "tournament"},
    {SelectionMethod::best_duplication, "best_duplication"},
}};

inline std::string_view to_string(SelectionMethod m) {
  for (const auto& [v, name] : kSelectionNames)
    if (v == m) return name;
  return "?";
}

inline std::optional<SelectionMethod> parse_selection(std::string_view s) {
  for (const auto& [v, name] : kSelectionNames)
    if (name == s) return v;
  return std::nullopt;
}

struct SelectionOptions {
  std::size_t tournament_size = 3;
  std::size_t elite_count = 10;   // best_duplication: top individuals duplicated
  std::size_t random_count = 10;  // best_duplication: random individuals duplicated
};

/// Indices of `pop` ordered fittest first; ties keep population order.
inline std::vector<std::size_t> rank_by_fitness(std::span<const Individual> pop) {
  std::vector<std::size_t> order(pop.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return beats(pop[a].fit(), pop[b].fit());
  });
  return order;
}

namespace detail {

template <class URBG>
std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t k, URBG& rng) {
  std::vector<std::size_t> idx(population);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(i, population - 1)(rng);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace detail

template <class URBG>
std::vector<std::size_t> select_indices(SelectionMethod method, std::span<const Individual> pop,
                                        std::size_t k, URBG& rng, const SelectionOptions& opts = {}) {
  for (const auto& ind : pop)
    if (!ind.fitness) throw std::invalid_argument("select: population contains unevaluated individuals");
  const bool with_replacement = method == SelectionMethod::roulette || method == SelectionMethod::tournament;
  if (!with_replacement && k > pop.size())
    throw std::invalid_argument("select: cannot choose " + std::to_string(k) + " from " +
                                std::to_string(pop.size()) + " individuals");
  if (k > 0 && pop.empty()) throw std::invalid_argument("select: empty population");

  std::vector<std::size_t> out;
  out.reserve(k);
  switch (method) {
    case SelectionMethod::best: {
      auto order = rank_by_fitness(pop);
      order.resize(k);
      return order;
    }
    case SelectionMethod::worst: {
      auto order = rank_by_fitness(pop);
      std::reverse(order.begin(), order.end());
      order.resize(k);
      return order;
    }
    case SelectionMethod::random:
      return detail::sample_without_replacement(pop.size(), k, rng);
    case SelectionMethod::roulette: {
      std::vector<double> weights(pop.size());
      double total = 0.0;
      for (std::size_t i = 0; i < pop.size(); ++i) total += weights[i] = pop[i].fit().fidelity;
      if (!(total > 0.0)) {
        for (std::size_t i = 0; i < k; ++i)
          out.push_back(std::uniform_int_distribution<std::size_t>(0, pop.size() - 1)(rng));
        return out;
      }
      std::discrete_distribution<std::size_t> wheel(weights.begin(), weights.end());
      for (std::size_t i = 0; i < k; ++i) out.push_back(wheel(rng));
      return out;
    }
    case SelectionMethod::tournament: {
      if (opts.tournament_size == 0) throw std::invalid_argument("select: tournament size must be >= 1");
      std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t winner = pick(rng);
        for (std::size_t r = 1; r < opts.tournament_size; ++r) {
          const std::size_t challenger = pick(rng);
          if (pop[challenger].fit().fidelity > pop[winner].fit().fidelity) winner = challenger;
        }
        out.push_back(winner);
      }
      return out;
    }
    case SelectionMethod::best_duplication: {
      const auto order = rank_by_fitness(pop);
      const std::size_t elite = std::min(opts.elite_count, pop.size());
      for (std::size_t i = 0; i < elite; ++i) out.insert(out.end(), 2, order[i]);
      for (std::size_t r : detail::sample_without_replacement(pop.size(), std::min(opts.random_count, pop.size()), rng))
        out.insert(out.end(), 2, r);
      for (std::size_t i = elite; i < order.size() && out.size() < k; ++i) out.push_back(order[i]);
      out.resize(std::min(out.size(), k));
      return out;
    }
  }
  throw std::invalid_argument("select: unknown method");
}

template <class URBG>
std::vector<Individual> select(SelectionMethod method, std::span<const Individual> pop, std::size_t k,
                               URBG& rng, const SelectionOptions& opts = {}) {
  std::vector<Individual> chosen;
  chosen.reserve(k);
  for (std::size_t i : select_indices(method, pop, k, rng, opts)) chosen.push_back(pop[i]);
  return chosen;
}

}  // namespace ctprep
