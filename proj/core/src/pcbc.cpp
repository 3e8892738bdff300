#include "tropsolve/pcbc.hpp"

#include <limits>
#include <string>

#include "tropsolve/linalg.hpp"

namespace tropsolve {
namespace {

std::size_t binomial_capped(std::size_t a, std::size_t b) {
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max() / 2;
  std::size_t out = 1;
  for (std::size_t k = 1; k <= b; ++k) {
    const std::size_t num = a - b + k;
    if (out > cap / num) return cap;
    out = out * num / k;
  }
  return out;
}

[[noreturn]] void rethrow_in_phase(std::size_t k) {
  const std::string where = "constraint " + std::to_string(k + 1) + ": ";
  try {
    throw;
  } catch (const NotGenericError& e) {
    throw NotGenericError(e.report(), where + e.what());
  } catch (const Error& e) {
    throw Error(e.code(), where + e.what());
  }
}

}  // namespace

std::string_view to_string(PhaseOutcome o) {
  switch (o) {
    case PhaseOutcome::AlreadyFeasible: return "already_feasible";
    case PhaseOutcome::Entered: return "entered";
    case PhaseOutcome::RuleNone: return "rule_none";
  }
  return "?";
}

std::string_view to_string(Feasibility f) { return f == Feasibility::Empty ? "empty" : "nonempty"; }

PcbcResult run_pcbc(const TropLP& lp, const LeavingRule& rule) {
  const std::size_t n = lp.cols();
  PcbcResult res;
  Basis basis = Basis::initial(n);
  TropVec point(n);
  SolveTrace& trace = res.trace;

  for (std::size_t k = 0; k < lp.rows(); ++k) {
    PhaseTrace phase;
    phase.constraint = k;
    phase.bases.push_back(basis);
    phase.points.push_back(point);
    try {
      const TropLP next = lp.prefix(k + 1);
      const auto [lhs, rhs] = eval_row(lp.a().row(k), lp.b()[k], point);
      if (lhs >= rhs) {
        phase.outcome = PhaseOutcome::AlreadyFeasible;
        trace.phases.push_back(std::move(phase));
        continue;
      }
      const TropLP current = lp.prefix(k);
      const RuleContext ctx = RuleContext::for_phase(lp, k);
      const std::size_t limit = binomial_capped(k + n, n);
      bool done = false;
      for (std::size_t iter = 0; !done; ++iter) {
        if (iter > limit)
          fail(ErrorCode::CycleDetected, "shadow-vertex path exceeded " + std::to_string(limit) + " steps");
        const auto k_out = rule(ctx, basis);
        if (!k_out) {
          phase.outcome = PhaseOutcome::RuleNone;
          trace.phases.push_back(std::move(phase));
          trace.result = Feasibility::Empty;
          res.status = Feasibility::Empty;
          res.final_basis = basis;
          return res;
        }
        auto step = try_enter_constraint(next, basis, *k_out, k);
        if (step) {
          phase.outcome = PhaseOutcome::Entered;
          done = true;
        } else {
          step = pivot(current, basis, *k_out);
          if (!step)
            fail(ErrorCode::InvariantViolation, "no feasible neighbour of " + to_string(basis) +
                                                    " dropping " + to_string(*k_out));
        }
        basis = std::move(step->basis);
        point = std::move(step->point);
        phase.bases.push_back(basis);
        phase.points.push_back(point);
        ++trace.total_pivots;
      }
    } catch (const Error&) {
      rethrow_in_phase(k);
    }
    trace.phases.push_back(std::move(phase));
  }
  trace.result = Feasibility::NonEmpty;
  res.status = Feasibility::NonEmpty;
  res.witness = point;
  res.final_basis = basis;
  return res;
}

PcbcResult trop_pcbc(const TropLP& lp) { return run_pcbc(lp, leaving_variable); }

Feasibility feasibility(const TropLP& lp) { return trop_pcbc(lp).status; }

}  // namespace tropsolve
