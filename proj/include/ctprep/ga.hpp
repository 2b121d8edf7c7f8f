#pragma once

// Generational loop: 2*pop random individuals, select to pop, then per
// generation duplicate, pairwise crossover, mutate, re-evaluate, select.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ctprep/fitness.hpp"
#include "ctprep/selection.hpp"
#include "ctprep/statevec.hpp"
#include "ctprep/variation.hpp"

namespace ctprep {

struct GaParams {
  std::size_t pop_size = 150;
  std::size_t no_gens = 20000;
  double cxpb = 0.5;
  double mutpb = 0.25;
  CrossoverMethod crossover_method = CrossoverMethod::messy_one_point;
  SelectionMethod selection_method = SelectionMethod::best_duplication;
  std::size_t tournament_size = 3;
  std::size_t init_len_min = 1;
  std::size_t init_len_max = 30;
  /// Stop once the mean population gate count exceeds this.
  double size_limit = 2000.0;
  /// Generations the best fitness must stay unchanged at fidelity >= 1 - 1e-12
  /// before stopping early. 0 disables the rule.
  std::size_t target_patience = 0;
  std::uint64_t seed = 0;
  /// Worker threads for fitness evaluation. Results do not depend on this.
  unsigned eval_threads = 1;

  void validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument("GaParams: " + m); };
    if (pop_size < 2 || pop_size % 2 != 0) fail("pop_size must be even and >= 2");
    if (!(cxpb >= 0.0 && cxpb <= 1.0)) fail("cxpb must lie in [0, 1]");
    if (!(mutpb >= 0.0 && mutpb <= 1.0)) fail("mutpb must lie in [0, 1]");
    if (init_len_min > init_len_max) fail("init_len_min exceeds init_len_max");
    if (selection_method == SelectionMethod::tournament && tournament_size == 0)
      fail("tournament_size must be >= 1");
    if (!(size_limit > 0.0)) fail("size_limit must be positive");
    if (eval_threads == 0) fail("eval_threads must be >= 1");
  }
};

enum class TerminationReason { generation_limit, size_limit, target_reached };

inline std::string_view to_string(TerminationReason r) {
  switch (r) {
    case TerminationReason::generation_limit: return "generation_limit";
    case TerminationReason::size_limit: return "size_limit";
    case TerminationReason::target_reached: return "target_reached";
  }
  return "?";
}

inline constexpr double kTargetFidelity = 1.0 - 1e-12;

struct RunResult {
  Individual best;                 // fittest member of the final population
  std::size_t generations_run = 0;
  TerminationReason termination_reason = TerminationReason::generation_limit;
  std::vector<Fitness> history;    // best-so-far; entry 0 is the initial selection
  double wall_time = 0.0;          // seconds
  double final_mean_gate_count = 0.0;
  GaParams params;
};

/// Evaluates every individual without a fitness. Work is split into
/// contiguous index blocks, so results are identical for any thread count.
inline void evaluate_pending(std::vector<Individual>& pop, const StateVector& target, unsigned threads) {
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < pop.size(); ++i)
    if (!pop[i].fitness) pending.push_back(i);
  if (pending.empty()) return;

  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) pop[pending[k]].fitness = evaluate(pop[pending[k]].genome, target);
  };
  const std::size_t workers = std::min<std::size_t>(threads, pending.size());
  if (workers <= 1) {
    work(0, pending.size());
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  const std::size_t chunk = (pending.size() + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t lo = std::min(w * chunk, pending.size());
    const std::size_t hi = std::min(lo + chunk, pending.size());
    pool.emplace_back(work, lo, hi);
  }
  work(0, std::min(chunk, pending.size()));
  for (auto& t : pool) t.join();
}

inline double mean_gate_count(const std::vector<Individual>& pop) {
  if (pop.empty()) return 0.0;
  double total = 0.0;
  for (const auto& ind : pop) total += static_cast<double>(ind.genome.size());
  return total / static_cast<double>(pop.size());
}

inline const Individual& fittest(const std::vector<Individual>& pop) {
  return *std::max_element(pop.begin(), pop.end(), [](const Individual& a, const Individual& b) {
    return beats(b.fit(), a.fit());
  });
}

/// Called after each completed generation with (generation, population).
using GenerationObserver = std::function<void(std::size_t, const std::vector<Individual>&)>;

inline RunResult run(const GaParams& params, const StateVector& target, const GenerationObserver& observe = {}) {
  params.validate();
  const auto started = std::chrono::steady_clock::now();
  const int n = target.qubits();
  std::mt19937_64 rng(params.seed);
  const SelectionOptions sel_opts{.tournament_size = params.tournament_size};

  RunResult result;
  result.params = params;

  std::vector<Individual> population;
  population.reserve(2 * params.pop_size);
  std::uniform_int_distribution<std::size_t> init_len(params.init_len_min, params.init_len_max);
  for (std::size_t i = 0; i < 2 * params.pop_size; ++i)
    population.emplace_back(random_circuit(n, init_len(rng), rng));
  evaluate_pending(population, target, params.eval_threads);
  std::vector<Individual> offspring =
      select(params.selection_method, std::span<const Individual>(population), params.pop_size, rng, sel_opts);

  Fitness best_so_far = fittest(offspring).fit();
  result.history.push_back(best_so_far);
  std::size_t unchanged = 0;

  std::bernoulli_distribution do_cross(params.cxpb);
  std::bernoulli_distribution do_mutate(params.mutpb);

  for (std::size_t gen = 0; gen < params.no_gens; ++gen) {
    // clones go after the originals, so pairs (0,1), (2,3), ... never mix them
    const std::size_t half = offspring.size();
    offspring.reserve(2 * half);
    for (std::size_t i = 0; i < half; ++i) offspring.push_back(offspring[i]);

    for (std::size_t i = 1; i < offspring.size(); i += 2) {
      if (!do_cross(rng)) continue;
      auto [c1, c2] = crossover(params.crossover_method, offspring[i - 1].genome, offspring[i].genome, rng);
      offspring[i - 1] = Individual(std::move(c1));
      offspring[i] = Individual(std::move(c2));
    }
    for (auto& ind : offspring) {
      if (!do_mutate(rng)) continue;
      mutate_in_place(ind.genome, rng);
      ind.fitness.reset();
    }
    // untouched individuals keep their (deterministic) fitness
    evaluate_pending(offspring, target, params.eval_threads);
    offspring = select(params.selection_method, std::span<const Individual>(offspring), params.pop_size, rng, sel_opts);

    result.generations_run = gen + 1;
    const Fitness& gen_best = fittest(offspring).fit();
    if (beats(gen_best, best_so_far)) {
      best_so_far = gen_best;
      unchanged = 0;
    } else {
      ++unchanged;
    }
    result.history.push_back(best_so_far);
    if (observe) observe(gen + 1, offspring);

    if (mean_gate_count(offspring) > params.size_limit) {
      result.termination_reason = TerminationReason::size_limit;
      break;
    }
    if (params.target_patience > 0 && best_so_far.fidelity >= kTargetFidelity &&
        unchanged >= params.target_patience) {
      result.termination_reason = TerminationReason::target_reached;
      break;
    }
  }

  result.best = fittest(offspring);
  result.final_mean_gate_count = mean_gate_count(offspring);
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace ctprep
