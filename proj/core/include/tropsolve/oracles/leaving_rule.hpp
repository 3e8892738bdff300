#pragma once

#include <optional>

#include "tropsolve/shadow_vertex.hpp"

namespace tropsolve::oracles {

inline constexpr std::size_t kOracleRuleLimit = 7;

/// Reference leaving rule computed in the Puiseux lift: reduced costs y, z of
/// u and v at the basis come from full n x n Cramer determinants of the lifted
/// basis matrix, and the element of {y > 0, z > 0} with the smallest y/z is
/// returned. n <= 7 (SizeLimit otherwise).
std::optional<BasisElem> oracle_leaving_variable(const RuleContext& ctx, const Basis& basis);

}  // namespace tropsolve::oracles
