#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "tropsolve/shadow_vertex.hpp"

namespace tropsolve {

enum class PhaseOutcome { AlreadyFeasible, Entered, RuleNone };
enum class Feasibility { Empty, NonEmpty };

std::string_view to_string(PhaseOutcome o);
std::string_view to_string(Feasibility f);

/// One constraint-processing phase. bases[0] is the basis the phase started
/// from; points[t] is the basic point of bases[t].
struct PhaseTrace {
  std::size_t constraint = 0;
  std::vector<Basis> bases;
  std::vector<TropVec> points;
  PhaseOutcome outcome = PhaseOutcome::AlreadyFeasible;

  friend bool operator==(const PhaseTrace&, const PhaseTrace&) = default;
};

struct SolveTrace {
  std::vector<PhaseTrace> phases;
  std::size_t total_pivots = 0;
  Feasibility result = Feasibility::Empty;

  friend bool operator==(const SolveTrace&, const SolveTrace&) = default;
};

struct PcbcResult {
  Feasibility status = Feasibility::Empty;
  std::optional<TropVec> witness;  // set iff NonEmpty
  Basis final_basis;
  SolveTrace trace;
};

using LeavingRule = std::function<std::optional<BasisElem>(const RuleContext&, const Basis&)>;

/// Processes the constraints one at a time, starting from (empty, [n]) at
/// (-inf, ..., -inf), following the shadow-vertex path of each new row until
/// it becomes feasible (Entered) or the rule reports no leaving element
/// (Empty). Errors are rethrown with the phase prepended to the message.
PcbcResult run_pcbc(const TropLP& lp, const LeavingRule& rule);

/// run_pcbc with the tropical leaving_variable rule.
PcbcResult trop_pcbc(const TropLP& lp);

Feasibility feasibility(const TropLP& lp);

}  // namespace tropsolve
