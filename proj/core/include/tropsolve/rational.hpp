#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace tropsolve {

using Rational = boost::rational<std::int64_t>;

/// Accepts "p", "-p", "+p" or "p/q" (q > 0). Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

}  // namespace tropsolve
