#include "tropsolve/matrix.hpp"

namespace tropsolve {

TropMatrix modulus_matrix(const SignedMatrix& m) {
  TropMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).modulus();
  return out;
}

RowSides eval_row(std::span<const SignedTrop> a, const SignedTrop& b, std::span<const Trop> x) {
  if (a.size() != x.size()) fail(ErrorCode::DimensionMismatch, "row length differs from point dimension");
  RowSides sides{b.positive_part(), b.negative_part()};
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero() || x[j].is_neg_inf()) continue;
    const Trop term = tmul(a[j].modulus(), x[j]);
    if (a[j].sign() > 0)
      sides.lhs = tmax(sides.lhs, term);
    else
      sides.rhs = tmax(sides.rhs, term);
  }
  return sides;
}

Sides eval_sides(const SignedMatrix& a, std::span<const SignedTrop> b, std::span<const Trop> x) {
  if (b.size() != a.rows() || x.size() != a.cols())
    fail(ErrorCode::DimensionMismatch, "eval_sides: dimensions of A, b and x do not match");
  Sides out;
  out.lhs.reserve(a.rows());
  out.rhs.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto [lhs, rhs] = eval_row(a.row(i), b[i], x);
    out.lhs.push_back(std::move(lhs));
    out.rhs.push_back(std::move(rhs));
  }
  return out;
}

}  // namespace tropsolve
