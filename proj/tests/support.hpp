#pragma once

#include <random>
#include <string_view>

#include "tropsolve/games.hpp"
#include "tropsolve/io.hpp"
#include "tropsolve/selfcheck.hpp"

namespace tropsolve::testing {

inline SignedMatrix mat(std::string_view text) { return io::parse_signed_matrix(text); }
inline SignedVec vec(std::string_view text) { return io::parse_signed_vec(text); }
inline SignedTrop sig(std::string_view text) { return io::parse_signed(text); }

inline TropVec point(std::initializer_list<Trop> xs) { return TropVec(xs); }

inline TropLP five_row_lp() {
  return TropLP(mat("0 1; ~-10 0; ~-3 0; ~0 ~2; 4 ~0"), vec("~3 ~1 4 8 ~5"));
}

inline TropLP contradiction_1d() { return TropLP(mat("0; ~0"), vec("~5 3")); }

inline Game game(std::string_view a, std::string_view b) {
  auto to_trop = [](const SignedMatrix& m) {
    TropMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).modulus();
    return out;
  };
  return Game(to_trop(mat(a)), to_trop(mat(b)));
}

inline Game sparse_3x3_game() { return game("5 -2 -inf; -inf -inf 2; -inf 0 -inf", "-1 -inf 3; 3 10 -inf; -inf 1 -inf"); }
inline Game one_by_two_game() { return game("7 2", "5 3"); }

/// Strongly non-degenerate LP from a random game.
inline TropLP random_game_lp(std::mt19937_64& rng, std::size_t max_m, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> msize(1, max_m);
  std::uniform_int_distribution<std::size_t> nsize(1, max_n);
  const Game g = random_game(msize(rng), nsize(rng), PayoffRange{-1000, 1000}, rng());
  std::uniform_int_distribution<std::size_t> pick(0, g.circles() - 1);
  return to_feasibility_instance(build_w(g), pick(rng));
}

}  // namespace tropsolve::testing
