#pragma once

// Seeded experiment batches: build targets, run the GA per seed, aggregate
// mean and sample standard deviation, write report/summary/QASM/history files.

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "ctprep/circuit.hpp"
#include "ctprep/ga.hpp"
#include "ctprep/qasm.hpp"
#include "ctprep/targets.hpp"

namespace ctprep {

enum class StateFamily { random, poisson, w, ghz, qft, file };

inline constexpr std::array<std::pair<StateFamily, std::string_view>, 6> kFamilyNames{{
    {StateFamily::random, "random"},
    {StateFamily::poisson, "poisson"},
    {StateFamily::w, "w"},
    {StateFamily::ghz, "ghz"},
    {StateFamily::qft, "qft"},
    {StateFamily::file, "file"},
}};

inline std::string_view to_string(StateFamily f) {
  for (const auto& [v, name] : kFamilyNames)
    if (v == f) return name;
  return "?";
}

inline std::optional<StateFamily> parse_family(std::string_view s) {
  for (const auto& [v, name] : kFamilyNames)
    if (name == s) return v;
  return std::nullopt;
}

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  StateFamily family = StateFamily::ghz;
  int qubits = 3;
  std::size_t runs = 10;
  std::uint64_t base_seed = 0;
  GaParams ga;
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> target_file;
  /// Runs executed concurrently. Each run owns its RNG stream.
  unsigned jobs = 1;

  std::uint64_t run_seed(std::size_t run_index) const noexcept { return base_seed + run_index; }

  void validate() const {
    if (runs < 1) throw ConfigError("runs must be >= 1");
    if (qubits < 1 || qubits > kMaxQubits)
      throw ConfigError("qubit count " + std::to_string(qubits) + " out of range");
    if (family == StateFamily::file && !target_file) throw ConfigError("state 'file' requires a target file");
    if (jobs == 0) throw ConfigError("jobs must be >= 1");
    try {
      ga.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
};

/// Seed for the Haar target of a run, decorrelated from the GA stream that
/// uses the same run seed.
inline std::uint64_t target_seed(std::uint64_t run_seed) noexcept {
  std::uint64_t z = run_seed + 0x9E3779B97F4A7C15ULL;  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline StateVector build_target(StateFamily family, int n, std::uint64_t run_seed,
                                const std::optional<std::filesystem::path>& target_file = std::nullopt) {
  switch (family) {
    case StateFamily::random: return haar_random(n, target_seed(run_seed));
    case StateFamily::poisson: return poisson_state(n);
    case StateFamily::w: return w_state(n);
    case StateFamily::ghz: return ghz(n);
    case StateFamily::qft: return qft_all_ones(n);
    case StateFamily::file:
      if (!target_file) throw ConfigError("state 'file' requires a target file");
      return load_target_file(target_file->string(), n);
  }
  throw ConfigError("unknown state family");
}

struct RunSummary {
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  RunResult result;
  std::size_t depth = 0;

  const Fitness& fitness() const { return result.best.fit(); }
};

struct MetricStats {
  double mean = 0.0;
  double std = 0.0;  // sample (n-1); 0 for a single value
};

struct Aggregate {
  MetricStats fidelity;
  MetricStats gate_count;
  MetricStats t_count;
  MetricStats wall_time;
};

inline MetricStats mean_std(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean_std: empty input");
  double sum = 0.0;
  for (double x : xs) sum += x;
  MetricStats s;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

/// Statistics over the best individual of each run.
inline Aggregate aggregate(std::span<const RunResult> results) {
  if (results.empty()) throw std::invalid_argument("aggregate: no runs");
  std::vector<double> fid, gates, ts, wall;
  for (const auto& r : results) {
    fid.push_back(r.best.fit().fidelity);
    gates.push_back(static_cast<double>(r.best.fit().gate_count));
    ts.push_back(static_cast<double>(r.best.fit().t_count));
    wall.push_back(r.wall_time);
  }
  return {mean_std(fid), mean_std(gates), mean_std(ts), mean_std(wall)};
}

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<RunSummary> runs;
  Aggregate stats;
};

// --- output ----------------------------------------------------------------

inline constexpr std::string_view kSummaryHeader =
    "run_index,seed,fidelity,gate_count,t_count,depth,generations_run,termination_reason,wall_time_s";
inline constexpr std::string_view kHistoryHeader = "generation,best_fidelity,best_gate_count,best_t_count";

inline std::string qasm_file_name(std::size_t run_index) { return "best_run" + std::to_string(run_index) + ".qasm"; }
inline std::string history_file_name(std::size_t run_index) {
  return "history_run" + std::to_string(run_index) + ".csv";
}

inline std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

inline std::string summary_csv(const ExperimentReport& report) {
  std::ostringstream os;
  os << kSummaryHeader << "\n";
  for (const auto& r : report.runs) {
    const Fitness& f = r.fitness();
    os << r.run_index << "," << r.seed << "," << format_real(f.fidelity) << "," << f.gate_count << ","
       << f.t_count << "," << r.depth << "," << r.result.generations_run << ","
       << to_string(r.result.termination_reason) << "," << format_real(r.result.wall_time) << "\n";
  }
  return os.str();
}

inline std::string history_csv(const RunResult& result) {
  std::ostringstream os;
  os << kHistoryHeader << "\n";
  for (std::size_t g = 0; g < result.history.size(); ++g) {
    const Fitness& f = result.history[g];
    os << g << "," << format_real(f.fidelity) << "," << f.gate_count << "," << f.t_count << "\n";
  }
  return os.str();
}

inline nlohmann::ordered_json ga_params_json(const GaParams& p) {
  return {
      {"pop_size", p.pop_size},
      {"no_gens", p.no_gens},
      {"cxpb", p.cxpb},
      {"mutpb", p.mutpb},
      {"crossover_method", to_string(p.crossover_method)},
      {"selection_method", to_string(p.selection_method)},
      {"tournament_size", p.tournament_size},
      {"init_len_min", p.init_len_min},
      {"init_len_max", p.init_len_max},
      {"size_limit", p.size_limit},
      {"target_patience", p.target_patience},
  };
}

inline nlohmann::ordered_json report_json(const ExperimentReport& report) {
  using nlohmann::ordered_json;
  const auto& c = report.config;
  ordered_json config = {
      {"state", to_string(c.family)},
      {"qubits", c.qubits},
      {"runs", c.runs},
      {"base_seed", c.base_seed},
      {"ga", ga_params_json(c.ga)},
  };
  if (c.target_file) config["target_file"] = c.target_file->string();

  ordered_json runs = ordered_json::array();
  for (const auto& r : report.runs) {
    const Fitness& f = r.fitness();
    runs.push_back({
        {"run_index", r.run_index},
        {"seed", r.seed},
        {"fidelity", f.fidelity},
        {"gate_count", f.gate_count},
        {"t_count", f.t_count},
        {"depth", r.depth},
        {"generations_run", r.result.generations_run},
        {"termination_reason", to_string(r.result.termination_reason)},
        {"final_mean_gate_count", r.result.final_mean_gate_count},
        {"qasm_file", qasm_file_name(r.run_index)},
        {"history_file", history_file_name(r.run_index)},
        {"wall_time_s", r.result.wall_time},
    });
  }
  auto stats = [](const MetricStats& s) { return ordered_json{{"mean", s.mean}, {"std", s.std}}; };
  return {
      {"config", config},
      {"runs", runs},
      {"aggregate",
       {
           {"fidelity", stats(report.stats.fidelity)},
           {"gate_count", stats(report.stats.gate_count)},
           {"t_count", stats(report.stats.t_count)},
           {"wall_time_s", stats(report.stats.wall_time)},
       }},
  };
}

namespace detail {

inline void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace detail

/// Writes report.json, summary.csv and per-run best_run<i>.qasm / history_run<i>.csv.
inline void write_outputs(const ExperimentReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir.string() + "': " + ec.message());
  detail::write_text(dir / "report.json", report_json(report).dump(2) + "\n");
  detail::write_text(dir / "summary.csv", summary_csv(report));
  for (const auto& r : report.runs) {
    detail::write_text(dir / qasm_file_name(r.run_index), to_qasm(r.result.best.genome));
    detail::write_text(dir / history_file_name(r.run_index), history_csv(r.result));
  }
}

/// Called as each run finishes (possibly from a worker thread, serialized).
using RunObserver = std::function<void(const RunSummary&)>;

/// Builds every target up front, so an unbuildable configuration fails
/// before any run starts. Writes outputs when config.output_dir is set.
inline ExperimentReport run_experiment(const ExperimentConfig& config, const RunObserver& on_run = {}) {
  config.validate();
  std::vector<StateVector> targets;
  targets.reserve(config.runs);
  try {
    for (std::size_t i = 0; i < config.runs; ++i)
      targets.push_back(build_target(config.family, config.qubits, config.run_seed(i), config.target_file));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }

  ExperimentReport report;
  report.config = config;
  report.runs.resize(config.runs);
  std::mutex notify;
  auto one = [&](std::size_t i) {
    GaParams params = config.ga;
    params.seed = config.run_seed(i);
    RunSummary& s = report.runs[i];
    s.run_index = i;
    s.seed = params.seed;
    s.result = run(params, targets[i]);
    s.depth = depth(s.result.best.genome);
    if (on_run) {
      std::lock_guard lock(notify);
      on_run(s);
    }
  };

  const std::size_t jobs = std::min<std::size_t>(config.jobs, config.runs);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < config.runs; ++i) one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < config.runs; i = next++) one(i);
        } catch (...) {
          std::lock_guard lock(notify);
          if (!failure) failure = std::current_exception();
          next = config.runs;
        }
      });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<RunResult> results;
  for (const auto& r : report.runs) results.push_back(r.result);
  report.stats = aggregate(results);
  if (!config.output_dir.empty()) write_outputs(report, config.output_dir);
  return report;
}

}  // namespace ctprep
