#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "tropsolve/rational.hpp"

namespace tropsolve {

/// An element a + c*eps of the ordered group Q x Z, where eps is a formal
/// scalar below every rational multiple of 1. Ordering is lexicographic:
/// smaller eps-degree first, then the finite part.
struct EpsVal {
  Rational finite{0};
  std::int64_t eps_deg = 0;

  EpsVal() = default;
  EpsVal(Rational f, std::int64_t e = 0) : finite(f), eps_deg(e) {}  // NOLINT
  EpsVal(std::int64_t f) : finite(f) {}                               // NOLINT
  EpsVal(int f) : finite(f) {}                                        // NOLINT

  /// eps^{(.)j}, the modulus of the j-th objective coefficient.
  static EpsVal eps_power(std::int64_t j) { return EpsVal(Rational(0), j); }

  EpsVal& operator+=(const EpsVal& o) {
    finite += o.finite;
    eps_deg += o.eps_deg;
    return *this;
  }
  EpsVal& operator-=(const EpsVal& o) {
    finite -= o.finite;
    eps_deg -= o.eps_deg;
    return *this;
  }
  friend EpsVal operator+(EpsVal a, const EpsVal& b) { return a += b; }
  friend EpsVal operator-(EpsVal a, const EpsVal& b) { return a -= b; }
  friend EpsVal operator-(const EpsVal& a) { return EpsVal(-a.finite, -a.eps_deg); }

  friend bool operator==(const EpsVal& a, const EpsVal& b) {
    return a.eps_deg == b.eps_deg && a.finite == b.finite;
  }
  friend std::strong_ordering operator<=>(const EpsVal& a, const EpsVal& b) {
    if (a.eps_deg != b.eps_deg) return b.eps_deg <=> a.eps_deg;
    if (a.finite == b.finite) return std::strong_ordering::equal;
    return a.finite < b.finite ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

/// "3", "-1/2", "2+eps", "1-3eps".
std::string to_string(const EpsVal& v);
std::ostream& operator<<(std::ostream& os, const EpsVal& v);

}  // namespace tropsolve
