#include "tropsolve/eps_val.hpp"

#include <ostream>

namespace tropsolve {

std::string to_string(const EpsVal& v) {
  if (v.eps_deg == 0) return to_string(v.finite);
  std::string out;
  if (v.finite.numerator() != 0) out = to_string(v.finite);
  const auto mag = v.eps_deg < 0 ? -v.eps_deg : v.eps_deg;
  if (v.eps_deg < 0)
    out += "-";
  else if (!out.empty())
    out += "+";
  if (mag != 1) out += std::to_string(mag);
  out += "eps";
  return out;
}

std::ostream& operator<<(std::ostream& os, const EpsVal& v) { return os << to_string(v); }

}  // namespace tropsolve
