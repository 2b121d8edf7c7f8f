#pragma once

#include "ctprep/circuit.hpp"
#include "ctprep/experiment.hpp"
#include "ctprep/fitness.hpp"
#include "ctprep/ga.hpp"
#include "ctprep/qasm.hpp"
#include "ctprep/selection.hpp"
#include "ctprep/statevec.hpp"
#include "ctprep/targets.hpp"
#include "ctprep/variation.hpp"
