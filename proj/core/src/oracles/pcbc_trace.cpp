#include "tropsolve/oracles/pcbc_trace.hpp"

#include "tropsolve/oracles/leaving_rule.hpp"

namespace tropsolve::oracles {

SolveTrace oracle_pcbc_trace(const TropLP& lp) { return run_pcbc(lp, oracle_leaving_variable).trace; }

}  // namespace tropsolve::oracles
