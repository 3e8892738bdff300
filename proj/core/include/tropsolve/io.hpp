#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "tropsolve/games.hpp"

namespace tropsolve::io {

/// Signed scalars: "3", "-1/2", "~4" for (-)4, "-inf" for the zero.
SignedTrop parse_signed(std::string_view text);
std::string format_signed(const SignedTrop& x);

/// Unsigned payoff: rational or "-inf".
Trop parse_trop(std::string_view text);
std::string format_trop(const Trop& x);

/// Rows separated by ';', entries by whitespace: "3 ~2; 1 ~1".
SignedMatrix parse_signed_matrix(std::string_view text);
SignedVec parse_signed_vec(std::string_view text);

struct GameFile {
  Game game;
  std::optional<std::size_t> initial;  // 0-based
};

/// {"m", "n", "A", "B", optional "initial" (1-based)}. Entries are JSON
/// integers or strings ("p/q", "-inf").
GameFile parse_game(std::string_view json);
std::string format_game(const Game& g, std::optional<std::size_t> initial = std::nullopt);

/// {"n", "rows": [{"a": [...], "b": ...}]} with signed-scalar strings.
TropLP parse_lp(std::string_view json);
std::string format_lp(const TropLP& lp);

/// Phase list with 1-based sorted index arrays for every visited basis.
std::string format_trace(const SolveTrace& trace);
SolveTrace parse_trace(std::string_view json);

/// {"error": <code>, "message": <text>}.
std::string format_error(ErrorCode code, std::string_view message);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace tropsolve::io
