#pragma once

#include <cstddef>
#include <cstdint>

#include "tropsolve/pcbc.hpp"

namespace tropsolve {

/// Bipartite mean-payoff game between m squares (Max) and n circles (Min).
/// A(i, j) is the payoff of Max moving square i -> circle j, B(i, j) the
/// payoff paid by Min moving circle j -> square i; -inf marks a missing arc.
/// Every node needs at least one outgoing arc.
class Game {
 public:
  Game(TropMatrix a, TropMatrix b);

  std::size_t squares() const { return a_.rows(); }
  std::size_t circles() const { return a_.cols(); }
  const TropMatrix& a() const { return a_; }
  const TropMatrix& b() const { return b_; }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  TropMatrix a_;
  TropMatrix b_;
};

/// W(i, j) = A(i, j) when A(i, j) > B(i, j) and (-)B(i, j) otherwise.
struct WMatrix {
  SignedMatrix entries;
};

/// Raises TiedPayoff if A(i, j) = B(i, j) is finite, MissingArc if both are
/// -inf.
WMatrix build_w(const Game& g);

/// Feasibility system whose nonemptiness decides whether Max wins from the
/// circle `initial`: its column moves to the last position and becomes the
/// right-hand side, the other n - 1 columns form A.
TropLP to_feasibility_instance(const WMatrix& w, std::size_t initial);

PcbcResult solve_game(const Game& g, std::size_t initial);
bool is_winning(const Game& g, std::size_t initial);

/// A(i, :) and B(i, :) swapped.
Game flip_row(const Game& g, std::size_t i);
/// A(:, j) and B(:, j) swapped.
Game flip_col(const Game& g, std::size_t j);

struct PayoffRange {
  std::int64_t lo = -1'000'000;
  std::int64_t hi = 1'000'000;
};

/// Dense instance with integer payoffs uniform in [lo, hi]; each pair (A, B)
/// is redrawn until A != B, then every row and every column is flipped with
/// an independent fair coin.
Game random_game(std::size_t m, std::size_t n, PayoffRange range, std::uint64_t seed);

}  // namespace tropsolve
