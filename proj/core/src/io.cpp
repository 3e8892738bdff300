#include "tropsolve/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace tropsolve::io {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(const std::string& msg) { fail(ErrorCode::ParseError, msg); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::size_t as_count(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    parse_fail(std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::string as_text(const json& v, const char* what) {
  if (!v.is_string()) parse_fail(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  parse_fail("matrix entries must be integers or strings");
}

TropMatrix trop_matrix(const json& v, std::size_t m, std::size_t n, const char* name) {
  if (!v.is_array() || v.size() != m) parse_fail(std::string(name) + " must have m rows");
  TropMatrix out(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!v[i].is_array() || v[i].size() != n) parse_fail(std::string(name) + " rows must have n entries");
    for (std::size_t j = 0; j < n; ++j) out(i, j) = parse_trop(scalar_text(v[i][j]));
  }
  return out;
}

json index_array(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto k : idx) out.push_back(k + 1);
  return out;
}

std::vector<std::size_t> parse_indices(const json& v) {
  if (!v.is_array()) parse_fail("index list must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : v) {
    const std::size_t k = as_count(x, "index");
    if (k == 0) parse_fail("indices are 1-based");
    out.push_back(k - 1);
  }
  return out;
}

}  // namespace

SignedTrop parse_signed(std::string_view text) {
  text = trim(text);
  const std::string original(text);
  if (text == "-inf") return SignedTrop::zero();
  int sign = 1;
  if (!text.empty() && text.front() == '~') {
    sign = -1;
    text.remove_prefix(1);
  }
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const Error&) {
    parse_fail("malformed signed scalar \"" + original + "\"");
  }
  return SignedTrop(Trop(r), sign);
}

std::string format_signed(const SignedTrop& x) {
  if (x.is_zero()) return "-inf";
  if (x.modulus().value().eps_deg != 0) fail(ErrorCode::ArgError, "eps terms have no file encoding");
  return (x.sign() < 0 ? "~" : "") + to_string(x.modulus().value().finite);
}

Trop parse_trop(std::string_view text) {
  text = trim(text);
  if (text == "-inf") return Trop::neg_inf();
  try {
    return Trop(parse_rational(text));
  } catch (const Error&) {
    parse_fail("malformed payoff \"" + std::string(text) + "\"");
  }
}

std::string format_trop(const Trop& x) {
  if (x.is_neg_inf()) return "-inf";
  if (x.value().eps_deg != 0) fail(ErrorCode::ArgError, "eps terms have no file encoding");
  return to_string(x.value().finite);
}

SignedMatrix parse_signed_matrix(std::string_view text) {
  SignedMatrix out;
  std::size_t start = 0;
  bool first = true;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const auto row = parse_signed_vec(text.substr(start, end - start));
    if (first && row.empty() && end == text.size()) break;
    if (!first && row.size() != out.cols()) parse_fail("ragged matrix text \"" + std::string(text) + "\"");
    out.append_row(row);
    first = false;
    start = end + 1;
  }
  return out;
}

SignedVec parse_signed_vec(std::string_view text) {
  SignedVec out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) out.push_back(parse_signed(tok));
  return out;
}

GameFile parse_game(std::string_view text) {
  const json doc = parse_json(text);
  const std::size_t m = as_count(field(doc, "m"), "m");
  const std::size_t n = as_count(field(doc, "n"), "n");
  auto a = trop_matrix(field(doc, "A"), m, n, "A");
  auto b = trop_matrix(field(doc, "B"), m, n, "B");
  GameFile out{Game(std::move(a), std::move(b)), std::nullopt};
  if (doc.contains("initial")) {
    const std::size_t j = as_count(doc.at("initial"), "initial");
    if (j == 0 || j > n) fail(ErrorCode::IndexOutOfRange, "initial must be in 1..n");
    out.initial = j - 1;
  }
  return out;
}

std::string format_game(const Game& g, std::optional<std::size_t> initial) {
  json doc;
  doc["m"] = g.squares();
  doc["n"] = g.circles();
  for (const auto& [key, mat] : {std::pair{"A", &g.a()}, std::pair{"B", &g.b()}}) {
    json rows = json::array();
    for (std::size_t i = 0; i < mat->rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < mat->cols(); ++j) {
        const Trop& x = (*mat)(i, j);
        if (x.is_finite() && x.value().finite.denominator() == 1)
          row.push_back(x.value().finite.numerator());
        else
          row.push_back(format_trop(x));
      }
      rows.push_back(std::move(row));
    }
    doc[key] = std::move(rows);
  }
  if (initial) doc["initial"] = *initial + 1;
  return doc.dump() + "\n";
}

TropLP parse_lp(std::string_view text) {
  const json doc = parse_json(text);
  const std::size_t n = as_count(field(doc, "n"), "n");
  const json& rows = field(doc, "rows");
  if (!rows.is_array()) parse_fail("rows must be an array");
  SignedMatrix a(rows.size(), n);
  SignedVec b;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& r = rows[i];
    const json& ai = field(r, "a");
    if (!ai.is_array() || ai.size() != n) parse_fail("row " + std::to_string(i + 1) + " must have n coefficients");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = parse_signed(scalar_text(ai[j]));
    b.push_back(parse_signed(scalar_text(field(r, "b"))));
  }
  return TropLP(std::move(a), std::move(b));
}

std::string format_lp(const TropLP& lp) {
  json doc;
  doc["n"] = lp.cols();
  json rows = json::array();
  for (std::size_t i = 0; i < lp.rows(); ++i) {
    json a = json::array();
    for (const auto& x : lp.a().row(i)) a.push_back(format_signed(x));
    rows.push_back({{"a", std::move(a)}, {"b", format_signed(lp.b()[i])}});
  }
  doc["rows"] = std::move(rows);
  return doc.dump() + "\n";
}

std::string format_trace(const SolveTrace& trace) {
  json doc;
  doc["result"] = std::string(to_string(trace.result));
  doc["total_pivots"] = trace.total_pivots;
  json phases = json::array();
  for (const auto& ph : trace.phases) {
    json bases = json::array();
    for (const auto& b : ph.bases) bases.push_back({{"I", index_array(b.rows)}, {"J", index_array(b.cols)}});
    json points = json::array();
    for (const auto& x : ph.points) {
      json coords = json::array();
      for (const auto& c : x) coords.push_back(format_trop(c));
      points.push_back(std::move(coords));
    }
    phases.push_back({{"constraint", ph.constraint + 1},
                      {"outcome", std::string(to_string(ph.outcome))},
                      {"bases", std::move(bases)},
                      {"points", std::move(points)}});
  }
  doc["phases"] = std::move(phases);
  return doc.dump(2) + "\n";
}

SolveTrace parse_trace(std::string_view text) {
  const json doc = parse_json(text);
  SolveTrace out;
  const std::string result = as_text(field(doc, "result"), "result");
  if (result == "empty")
    out.result = Feasibility::Empty;
  else if (result == "nonempty")
    out.result = Feasibility::NonEmpty;
  else
    parse_fail("unknown result \"" + result + "\"");
  out.total_pivots = as_count(field(doc, "total_pivots"), "total_pivots");
  const json& phases = field(doc, "phases");
  if (!phases.is_array()) parse_fail("phases must be an array");
  for (const auto& ph : phases) {
    PhaseTrace p;
    const std::size_t k = as_count(field(ph, "constraint"), "constraint");
    if (k == 0) parse_fail("constraint indices are 1-based");
    p.constraint = k - 1;
    const std::string outcome = as_text(field(ph, "outcome"), "outcome");
    if (outcome == to_string(PhaseOutcome::AlreadyFeasible))
      p.outcome = PhaseOutcome::AlreadyFeasible;
    else if (outcome == to_string(PhaseOutcome::Entered))
      p.outcome = PhaseOutcome::Entered;
    else if (outcome == to_string(PhaseOutcome::RuleNone))
      p.outcome = PhaseOutcome::RuleNone;
    else
      parse_fail("unknown outcome \"" + outcome + "\"");
    const json& bases = field(ph, "bases");
    if (!bases.is_array()) parse_fail("bases must be an array");
    for (const auto& b : bases)
      p.bases.push_back(Basis{parse_indices(field(b, "I")), parse_indices(field(b, "J"))});
    if (ph.contains("points")) {
      for (const auto& x : ph.at("points")) {
        if (!x.is_array()) parse_fail("points must be arrays of coordinates");
        TropVec point;
        for (const auto& c : x) point.push_back(parse_trop(scalar_text(c)));
        p.points.push_back(std::move(point));
      }
    }
    out.phases.push_back(std::move(p));
  }
  return out;
}

std::string format_error(ErrorCode code, std::string_view message) {
  json doc{{"error", std::string(to_string(code))}, {"message", std::string(message)}};
  return doc.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path);
  out << content;
  if (!out) fail(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace tropsolve::io
