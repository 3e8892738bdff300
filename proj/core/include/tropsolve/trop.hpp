#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include "tropsolve/eps_val.hpp"

namespace tropsolve {

/// Element of the max-plus semiring over EpsVal moduli: either -inf (the
/// tropical zero) or a finite EpsVal.
class Trop {
 public:
  Trop() = default;
  Trop(EpsVal v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Trop(Rational r) : value_(EpsVal(r)) {}  // NOLINT
  Trop(std::int64_t v) : value_(EpsVal(v)) {}  // NOLINT
  Trop(int v) : value_(EpsVal(v)) {}  // NOLINT

  static Trop neg_inf() { return Trop(); }
  static Trop unit() { return Trop(EpsVal()); }

  bool is_neg_inf() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Precondition: is_finite().
  const EpsVal& value() const { return *value_; }

  friend bool operator==(const Trop& a, const Trop& b) = default;
  friend std::strong_ordering operator<=>(const Trop& a, const Trop& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return b.is_neg_inf() <=> a.is_neg_inf();
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<EpsVal> value_;
};

/// Tropical product (sum of moduli); -inf is absorbing.
Trop tmul(const Trop& x, const Trop& y);
/// Tropical sum (maximum); -inf is neutral.
Trop tmax(const Trop& x, const Trop& y);

/// Signed tropical number: a sign in {+1, -1, 0} together with a modulus,
/// where the sign is 0 exactly when the modulus is -inf.
class SignedTrop {
 public:
  SignedTrop() = default;
  /// Throws InvalidArgument-style ArgError if the sign/modulus pair violates
  /// the zero invariant.
  SignedTrop(Trop modulus, int sign);

  static SignedTrop zero() { return SignedTrop(); }
  static SignedTrop pos(const Trop& modulus);
  static SignedTrop neg(const Trop& modulus);

  int sign() const { return sign_; }
  const Trop& modulus() const { return modulus_; }
  bool is_zero() const { return sign_ == 0; }

  /// (-)x.
  SignedTrop negated() const;
  /// x+ as an unsigned value: |x| if x is positive, -inf otherwise.
  Trop positive_part() const { return sign_ > 0 ? modulus_ : Trop(); }
  /// x- as an unsigned value: |x| if x is negative, -inf otherwise.
  Trop negative_part() const { return sign_ < 0 ? modulus_ : Trop(); }

  friend bool operator==(const SignedTrop& a, const SignedTrop& b) = default;

 private:
  Trop modulus_;
  int sign_ = 0;
};

/// Signed product: moduli add, signs multiply.
SignedTrop tmul(const SignedTrop& x, const SignedTrop& y);

/// Signed max. The sum of two opposite values of equal nonzero modulus is
/// undefined and raises BalancedSum.
SignedTrop tadd_signed(const SignedTrop& x, const SignedTrop& y);

std::string to_string(const Trop& x);
std::string to_string(const SignedTrop& x);
std::ostream& operator<<(std::ostream& os, const Trop& x);
std::ostream& operator<<(std::ostream& os, const SignedTrop& x);

}  // namespace tropsolve
