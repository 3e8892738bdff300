#pragma once

#include <cstddef>
#include <vector>

#include "tropsolve/games.hpp"

namespace tropsolve::oracles {

/// Positional strategies: sigma[i] is the circle Max moves to from square i,
/// tau[j] the square Min moves to from circle j.
struct StrategyPair {
  std::vector<std::size_t> sigma;
  std::vector<std::size_t> tau;
};

/// Upper bound on the number of strategy pairs game_value enumerates.
inline constexpr double kGameValueLimit = 1e7;

/// Mean payment per Max move on the cycle the play from circle `initial`
/// ends in. Throws MissingArc if a chosen arc does not exist.
Rational play_mean(const Game& g, const StrategyPair& s, std::size_t initial);

/// max over sigma of min over tau of play_mean, by enumeration of the
/// strategies made of existing arcs. SizeLimit beyond kGameValueLimit pairs.
Rational game_value(const Game& g, std::size_t initial);

}  // namespace tropsolve::oracles
