#include "tropsolve/trop.hpp"

#include <ostream>

#include "tropsolve/errors.hpp"

namespace tropsolve {

Trop tmul(const Trop& x, const Trop& y) {
  if (x.is_neg_inf() || y.is_neg_inf()) return Trop::neg_inf();
  return Trop(x.value() + y.value());
}

Trop tmax(const Trop& x, const Trop& y) { return x < y ? y : x; }

SignedTrop::SignedTrop(Trop modulus, int sign) : modulus_(std::move(modulus)), sign_(sign) {
  if (sign_ < -1 || sign_ > 1) fail(ErrorCode::ArgError, "sign must be in {-1, 0, +1}");
  if ((sign_ == 0) != modulus_.is_neg_inf())
    fail(ErrorCode::ArgError, "signed tropical zero must have sign 0 and modulus -inf");
}

SignedTrop SignedTrop::pos(const Trop& modulus) {
  return modulus.is_neg_inf() ? SignedTrop() : SignedTrop(modulus, 1);
}

SignedTrop SignedTrop::neg(const Trop& modulus) {
  return modulus.is_neg_inf() ? SignedTrop() : SignedTrop(modulus, -1);
}

SignedTrop SignedTrop::negated() const {
  SignedTrop out = *this;
  out.sign_ = -sign_;
  return out;
}

SignedTrop tmul(const SignedTrop& x, const SignedTrop& y) {
  if (x.is_zero() || y.is_zero()) return SignedTrop::zero();
  return SignedTrop(tmul(x.modulus(), y.modulus()), x.sign() * y.sign());
}

SignedTrop tadd_signed(const SignedTrop& x, const SignedTrop& y) {
  if (x.modulus() > y.modulus()) return x;
  if (y.modulus() > x.modulus()) return y;
  if (x.sign() != y.sign())
    fail(ErrorCode::BalancedSum, "balanced sum " + to_string(x) + " (+) " + to_string(y));
  return x;
}

std::string to_string(const Trop& x) {
  return x.is_neg_inf() ? std::string("-inf") : to_string(x.value());
}

std::string to_string(const SignedTrop& x) {
  if (x.is_zero()) return "-inf";
  return (x.sign() < 0 ? "~" : "") + to_string(x.modulus());
}

std::ostream& operator<<(std::ostream& os, const Trop& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const SignedTrop& x) { return os << to_string(x); }

}  // namespace tropsolve
