#include "tropsolve/oracles/lift.hpp"

#include <numeric>
#include <vector>

#include "tropsolve/errors.hpp"

namespace tropsolve::oracles {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::SizeLimit, "lift coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::SizeLimit, "lift coefficient overflow");
  return out;
}

struct Expansion {
  const SignedMatrix& m;
  std::span<const std::size_t> rows;
  std::span<const std::size_t> cols;
  std::vector<char> used;
  LiftPoly out;

  void run(std::size_t depth, const EpsVal& exponent, int sign) {
    if (depth == rows.size()) {
      out.add_term(exponent, sign);
      return;
    }
    std::size_t used_after = 0;  // used columns to the right of c: inversions
    for (std::size_t c = cols.size(); c-- > 0;) {
      if (used[c]) {
        ++used_after;
        continue;
      }
      const SignedTrop& x = m(rows[depth], cols[c]);
      if (x.is_zero()) continue;
      used[c] = 1;
      const int s = sign * x.sign() * (used_after % 2 == 0 ? 1 : -1);
      run(depth + 1, exponent + x.modulus().value(), s);
      used[c] = 0;
    }
  }
};

}  // namespace

LiftPoly LiftPoly::monomial(std::int64_t coeff, const EpsVal& exponent) {
  LiftPoly p;
  p.add_term(exponent, coeff);
  return p;
}

int LiftPoly::sign() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second > 0 ? 1 : -1;
}

void LiftPoly::add_term(const EpsVal& exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

LiftPoly& LiftPoly::operator+=(const LiftPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LiftPoly& LiftPoly::operator-=(const LiftPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LiftPoly operator*(const LiftPoly& a, const LiftPoly& b) {
  LiftPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, checked_mul(ca, cb));
  return out;
}

LiftPoly lift(const SignedTrop& x) {
  if (x.is_zero()) return {};
  return LiftPoly::monomial(x.sign(), x.modulus().value());
}

LiftPoly lift_det(const SignedMatrix& m, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) fail(ErrorCode::DimensionMismatch, "lift_det needs a square minor");
  if (rows.size() > kLiftMinorLimit) fail(ErrorCode::SizeLimit, "lift_det limited to 8x8 minors");
  Expansion ex{m, rows, cols, std::vector<char>(cols.size(), 0), {}};
  ex.run(0, EpsVal(), 1);
  return std::move(ex.out);
}

LiftPoly lift_det(const SignedMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "lift_det needs a square matrix");
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return lift_det(m, idx, idx);
}

LiftSign lift_minor_sign(const SignedMatrix& m, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols) {
  const LiftPoly p = lift_det(m, rows, cols);
  if (p.is_zero()) fail(ErrorCode::IdenticallyZero, "lifted minor is the zero series");
  return {p.sign(), p.valuation()};
}

}  // namespace tropsolve::oracles
