#pragma once

#include "tropsolve/pcbc.hpp"

namespace tropsolve::oracles {

/// Trace of the same constraint-by-constraint driver with the classical
/// Puiseux-lift leaving rule instead of the tropical one (n <= 7).
SolveTrace oracle_pcbc_trace(const TropLP& lp);

}  // namespace tropsolve::oracles
