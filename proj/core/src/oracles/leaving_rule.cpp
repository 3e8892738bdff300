#include "tropsolve/oracles/leaving_rule.hpp"

#include <vector>

#include "tropsolve/errors.hpp"
#include "tropsolve/oracles/lift.hpp"

namespace tropsolve::oracles {

std::optional<BasisElem> oracle_leaving_variable(const RuleContext& ctx, const Basis& basis) {
  const std::size_t n = ctx.cols();
  if (n > kOracleRuleLimit) fail(ErrorCode::SizeLimit, "classical rule oracle limited to n <= 7");
  if (basis.size() != n) fail(ErrorCode::DimensionMismatch, "basis does not have n elements");

  const auto elems = basis.elements();
  SignedMatrix mb(n, n);
  auto put_row = [&](SignedMatrix& out, std::size_t t, const BasisElem& e) {
    for (std::size_t j = 0; j < n; ++j) out(t, j) = SignedTrop::zero();
    if (e.is_col()) {
      out(t, e.index) = SignedTrop::pos(Trop::unit());
    } else {
      for (std::size_t j = 0; j < n; ++j) out(t, j) = ctx.matrix()(e.index, j);
    }
  };
  for (std::size_t t = 0; t < n; ++t) put_row(mb, t, elems[t]);

  const LiftPoly d = lift_det(mb);
  if (d.is_zero()) fail(ErrorCode::IdenticallyZero, "basis determinant vanishes");

  std::vector<LiftPoly> nu(n);
  std::vector<LiftPoly> nv(n);
  for (std::size_t t = 0; t < n; ++t) {
    SignedMatrix m = mb;
    for (std::size_t j = 0; j < n; ++j) m(t, j) = ctx.matrix()(ctx.u_row(), j);
    nu[t] = lift_det(m);
    for (std::size_t j = 0; j < n; ++j) m(t, j) = ctx.matrix()(ctx.v_row(), j);
    nv[t] = lift_det(m);
  }

  std::vector<std::size_t> candidates;
  for (std::size_t t = 0; t < n; ++t)
    if (nu[t].sign() == d.sign() && nv[t].sign() == d.sign()) candidates.push_back(t);
  if (candidates.empty()) return std::nullopt;

  // y_k / z_k < y_l / z_l  <=>  Nu_k Nv_l - Nu_l Nv_k < 0 (both z positive).
  auto smaller = [&](std::size_t k, std::size_t l) { return (nu[k] * nv[l] - nu[l] * nv[k]).sign() < 0; };
  std::size_t best = candidates.front();
  for (auto t : candidates)
    if (smaller(t, best)) best = t;
  for (auto t : candidates)
    if (t != best && !smaller(best, t))
      fail(ErrorCode::NoUniqueMin, "classical cost ratios tie at basis " + to_string(basis));
  return elems[best];
}

}  // namespace tropsolve::oracles
