// ctprep: Clifford+T state-preparation experiments from the command line.
//
//   ctprep run --state ghz --qubits 3 --runs 10 --gens 20000 --seed 1 --out results/
//   ctprep optimize --in circuit.qasm --out smaller.qasm
//   ctprep simulate --in circuit.qasm --target qft --qubits 3

#include <cstdint>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ctprep/ctprep.hpp"

namespace {

std::vector<std::string> names_of(const auto& table) {
  std::vector<std::string> out;
  for (const auto& entry : table) out.emplace_back(entry.second);
  return out;
}

void print_metrics(std::ostream& os, const ctprep::Circuit& c) {
  os << "gate_count " << ctprep::gate_count(c) << "\n"
     << "t_count " << ctprep::t_count(c) << "\n"
     << "depth " << ctprep::depth(c) << "\n";
}

int cmd_run(ctprep::ExperimentConfig& cfg, bool quiet) {
  auto report = ctprep::run_experiment(cfg, [&](const ctprep::RunSummary& s) {
    if (quiet) return;
    const auto& f = s.fitness();
    std::cerr << "run " << s.run_index << " seed " << s.seed << ": fidelity " << std::setprecision(6)
              << f.fidelity << " gates " << f.gate_count << " T " << f.t_count << " gens "
              << s.result.generations_run << " (" << ctprep::to_string(s.result.termination_reason) << ", "
              << std::setprecision(3) << s.result.wall_time << " s)\n";
  });
  const auto& a = report.stats;
  std::cout << std::setprecision(6) << "fidelity   " << a.fidelity.mean << " +- " << a.fidelity.std << "\n"
            << "gate_count " << a.gate_count.mean << " +- " << a.gate_count.std << "\n"
            << "t_count    " << a.t_count.mean << " +- " << a.t_count.std << "\n"
            << "wall_time  " << a.wall_time.mean << " +- " << a.wall_time.std << " s\n"
            << "outputs written to " << cfg.output_dir.string() << "\n";
  return 0;
}

int cmd_optimize(const std::string& in, const std::string& out) {
  const auto circuit = ctprep::load_qasm_file(in);
  const auto reduced = ctprep::optimize(circuit);
  std::ofstream os(out, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open '" + out + "' for writing");
  os << ctprep::to_qasm(reduced);
  if (!os.flush()) throw std::runtime_error("write to '" + out + "' failed");
  std::cout << "gates " << circuit.size() << " -> " << reduced.size() << ", T " << ctprep::t_count(circuit)
            << " -> " << ctprep::t_count(reduced) << "\n";
  return 0;
}

int cmd_simulate(const std::string& in, const std::string& target_name, std::optional<int> qubits,
                 const std::string& target_file, std::uint64_t seed) {
  const auto circuit = ctprep::load_qasm_file(in);
  const int n = qubits.value_or(circuit.qubits());
  if (n != circuit.qubits())
    throw ctprep::ConfigError("--qubits " + std::to_string(n) + " does not match the circuit's " +
                              std::to_string(circuit.qubits()) + "-qubit register");
  std::optional<std::filesystem::path> file;
  auto family = ctprep::parse_family(target_name);
  if (!family) {
    // anything that is not a family name is taken as a path
    family = ctprep::StateFamily::file;
    file = target_name;
  } else if (*family == ctprep::StateFamily::file) {
    if (target_file.empty()) throw ctprep::ConfigError("--target file requires --target-file");
    file = target_file;
  }
  const auto target = ctprep::build_target(*family, n, seed, file);
  const auto f = ctprep::evaluate(circuit, target);
  std::cout << std::setprecision(17) << "fidelity " << f.fidelity << "\n";
  print_metrics(std::cout, circuit);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford+T state preparation by genetic search"};
  app.require_subcommand(1);

  // run
  ctprep::ExperimentConfig cfg;
  cfg.runs = 10;
  std::string out_dir;
  std::string target_file;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "Run a seeded batch of GA runs against one target family");
  std::string family = "ghz";
  std::string cx_method = "messy_one_point";
  std::string sel_method = "best_duplication";
  run->add_option("--state", family, "Target state family")
      ->required()
      ->check(CLI::IsMember(names_of(ctprep::kFamilyNames)));
  run->add_option("--qubits", cfg.qubits, "Qubit count")->required()->check(CLI::Range(1, ctprep::kMaxQubits));
  run->add_option("--runs", cfg.runs, "Independent runs (seed base+i)")->capture_default_str();
  run->add_option("--pop", cfg.ga.pop_size, "Population size")->capture_default_str();
  run->add_option("--gens", cfg.ga.no_gens, "Generation budget")->capture_default_str();
  run->add_option("--cxpb", cfg.ga.cxpb, "Crossover probability")->capture_default_str();
  run->add_option("--mutpb", cfg.ga.mutpb, "Mutation probability")->capture_default_str();
  run->add_option("--crossover", cx_method, "Crossover method")
      ->check(CLI::IsMember(names_of(ctprep::kCrossoverNames)))
      ->capture_default_str();
  run->add_option("--selection", sel_method, "Selection method")
      ->check(CLI::IsMember(names_of(ctprep::kSelectionNames)))
      ->capture_default_str();
  run->add_option("--seed", cfg.base_seed, "Base seed")->capture_default_str();
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--target-file", target_file, "Target amplitudes for --state file");
  run->add_option("--size-limit", cfg.ga.size_limit, "Stop when mean gate count exceeds this")->capture_default_str();
  run->add_option("--init-len-min", cfg.ga.init_len_min, "Shortest initial circuit")->capture_default_str();
  run->add_option("--init-len-max", cfg.ga.init_len_max, "Longest initial circuit")->capture_default_str();
  run->add_option("--tournament-size", cfg.ga.tournament_size, "Tournament size")->capture_default_str();
  run->add_option("--patience", cfg.ga.target_patience,
                  "Stop after this many unchanged generations at fidelity 1 (0 = off)")
      ->capture_default_str();
  run->add_option("--threads", cfg.ga.eval_threads, "Fitness evaluation threads")->capture_default_str();
  run->add_option("--jobs", cfg.jobs, "Runs executed in parallel")->capture_default_str();
  run->add_flag("--quiet", quiet, "Suppress per-run progress");

  // optimize
  std::string opt_in;
  std::string opt_out;
  auto* opt = app.add_subcommand("optimize", "Apply the identity-cancellation pass to a QASM circuit");
  opt->add_option("--in", opt_in, "Input QASM")->required();
  opt->add_option("--out", opt_out, "Output QASM")->required();

  // simulate
  std::string sim_in;
  std::string sim_target;
  std::string sim_target_file;
  std::optional<int> sim_qubits;
  std::uint64_t sim_seed = 0;
  auto* sim = app.add_subcommand("simulate", "Report fidelity and metrics of a QASM circuit against a target");
  sim->add_option("--in", sim_in, "Input QASM")->required();
  sim->add_option("--target", sim_target, "random|poisson|w|ghz|qft|file, or a path to a target file")->required();
  sim->add_option("--qubits", sim_qubits, "Qubit count (defaults to the register size)");
  sim->add_option("--target-file", sim_target_file, "Target amplitudes for --target file");
  sim->add_option("--seed", sim_seed, "Run seed for the random family")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      // names were checked by the parser
      cfg.family = *ctprep::parse_family(family);
      cfg.ga.crossover_method = *ctprep::parse_crossover(cx_method);
      cfg.ga.selection_method = *ctprep::parse_selection(sel_method);
      cfg.output_dir = out_dir;
      if (!target_file.empty()) cfg.target_file = target_file;
      return cmd_run(cfg, quiet);
    }
    if (*opt) return cmd_optimize(opt_in, opt_out);
    if (*sim) return cmd_simulate(sim_in, sim_target, sim_qubits, sim_target_file, sim_seed);
  } catch (const ctprep::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
