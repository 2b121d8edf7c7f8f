// Evolves a circuit for the two-qubit Bell state and prints it as QASM.

#include <iostream>

#include "ctprep/ctprep.hpp"

int main() {
  ctprep::GaParams params;
  params.pop_size = 60;
  params.no_gens = 300;
  params.seed = 7;

  const auto target = ctprep::ghz(2);
  const auto result = ctprep::run(params, target);
  const auto& best = result.best;

  std::cout << "// fidelity " << best.fit().fidelity << ", " << best.fit().gate_count << " gates, "
            << best.fit().t_count << " T\n"
            << ctprep::to_qasm(best.genome);
}
