#include "tropsolve/rational.hpp"

#include <charconv>

#include "tropsolve/errors.hpp"

namespace tropsolve {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    fail(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    fail(ErrorCode::ParseError, "denominator must be an unsigned integer in '" + std::string(text) + "'");
  const auto den = parse_int(den_text, text);
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace tropsolve
