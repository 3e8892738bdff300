#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>

#include "tropsolve/matrix.hpp"

namespace tropsolve::oracles {

/// Finite Puiseux polynomial sum c_a t^a with exponents in Q x Z (the eps
/// degree is an infinitely negative formal scalar) and exact integer
/// coefficients. No zero coefficients are stored.
class LiftPoly {
 public:
  using Terms = std::map<EpsVal, std::int64_t, std::greater<>>;

  LiftPoly() = default;
  static LiftPoly monomial(std::int64_t coeff, const EpsVal& exponent);

  bool is_zero() const { return terms_.empty(); }
  /// Sign of the leading coefficient; 0 for the zero polynomial.
  int sign() const;
  /// Leading exponent. Precondition: !is_zero().
  const EpsVal& valuation() const { return terms_.begin()->first; }
  const Terms& terms() const { return terms_; }

  void add_term(const EpsVal& exponent, std::int64_t coeff);

  LiftPoly& operator+=(const LiftPoly& o);
  LiftPoly& operator-=(const LiftPoly& o);
  friend LiftPoly operator+(LiftPoly a, const LiftPoly& b) { return a += b; }
  friend LiftPoly operator-(LiftPoly a, const LiftPoly& b) { return a -= b; }
  friend LiftPoly operator*(const LiftPoly& a, const LiftPoly& b);
  friend bool operator==(const LiftPoly&, const LiftPoly&) = default;

 private:
  Terms terms_;
};

/// One-term lift sign(x) t^{|x|}; the zero polynomial for -inf.
LiftPoly lift(const SignedTrop& x);

inline constexpr std::size_t kLiftMinorLimit = 8;

/// Determinant of the one-term lift of M_{K x L} (rows and columns in the
/// given order) by permutation expansion. |K| = |L| <= 8.
LiftPoly lift_det(const SignedMatrix& m, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols);
/// Whole square matrix.
LiftPoly lift_det(const SignedMatrix& m);

struct LiftSign {
  int sign = 0;
  EpsVal valuation;
};

/// Sign and valuation of the lifted minor. IdenticallyZero if every term
/// cancels.
LiftSign lift_minor_sign(const SignedMatrix& m, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols);

}  // namespace tropsolve::oracles
