#include "tropsolve/games.hpp"

#include <random>
#include <string>

namespace tropsolve {
namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Game::Game(TropMatrix a, TropMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
    fail(ErrorCode::InvalidGame, "A and B must have the same shape");
  if (a_.rows() == 0 || a_.cols() == 0) fail(ErrorCode::InvalidGame, "game needs at least one node of each kind");
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    bool live = false;
    for (std::size_t j = 0; j < a_.cols(); ++j) live = live || a_(i, j).is_finite();
    if (!live) fail(ErrorCode::InvalidGame, "square " + std::to_string(i + 1) + " has no outgoing arc");
  }
  for (std::size_t j = 0; j < b_.cols(); ++j) {
    bool live = false;
    for (std::size_t i = 0; i < b_.rows(); ++i) live = live || b_(i, j).is_finite();
    if (!live) fail(ErrorCode::InvalidGame, "circle " + std::to_string(j + 1) + " has no outgoing arc");
  }
  for (std::size_t i = 0; i < a_.rows(); ++i)
    for (std::size_t j = 0; j < a_.cols(); ++j)
      for (const Trop* x : {&a_(i, j), &b_(i, j)})
        if (x->is_finite() && x->value().eps_deg != 0)
          fail(ErrorCode::InvalidGame, "payoffs must be rational");
}

WMatrix build_w(const Game& g) {
  SignedMatrix w(g.squares(), g.circles());
  for (std::size_t i = 0; i < g.squares(); ++i) {
    for (std::size_t j = 0; j < g.circles(); ++j) {
      const Trop& a = g.a()(i, j);
      const Trop& b = g.b()(i, j);
      if (a.is_neg_inf() && b.is_neg_inf()) fail(ErrorCode::MissingArc, "no arc in either direction at " + cell(i, j));
      if (a == b) fail(ErrorCode::TiedPayoff, "A and B tie at " + cell(i, j));
      w(i, j) = a > b ? SignedTrop::pos(a) : SignedTrop::neg(b);
    }
  }
  return {std::move(w)};
}

TropLP to_feasibility_instance(const WMatrix& w, std::size_t initial) {
  const SignedMatrix& m = w.entries;
  if (initial >= m.cols()) fail(ErrorCode::IndexOutOfRange, "initial circle out of range");
  SignedMatrix a(m.rows(), m.cols() - 1);
  SignedVec b(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j == initial) continue;
      a(i, c++) = m(i, j);
    }
    b[i] = m(i, initial);
  }
  return TropLP(std::move(a), std::move(b));
}

PcbcResult solve_game(const Game& g, std::size_t initial) {
  return trop_pcbc(to_feasibility_instance(build_w(g), initial));
}

bool is_winning(const Game& g, std::size_t initial) {
  return solve_game(g, initial).status == Feasibility::NonEmpty;
}

Game flip_row(const Game& g, std::size_t i) {
  if (i >= g.squares()) fail(ErrorCode::IndexOutOfRange, "flip_row index out of range");
  TropMatrix a = g.a();
  TropMatrix b = g.b();
  for (std::size_t j = 0; j < g.circles(); ++j) std::swap(a(i, j), b(i, j));
  return Game(std::move(a), std::move(b));
}

Game flip_col(const Game& g, std::size_t j) {
  if (j >= g.circles()) fail(ErrorCode::IndexOutOfRange, "flip_col index out of range");
  TropMatrix a = g.a();
  TropMatrix b = g.b();
  for (std::size_t i = 0; i < g.squares(); ++i) std::swap(a(i, j), b(i, j));
  return Game(std::move(a), std::move(b));
}

Game random_game(std::size_t m, std::size_t n, PayoffRange range, std::uint64_t seed) {
  if (range.hi <= range.lo) fail(ErrorCode::ArgError, "payoff range needs at least two values");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> payoff(range.lo, range.hi);
  TropMatrix a(m, n);
  TropMatrix b(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t x = 0;
      std::int64_t y = 0;
      do {
        x = payoff(rng);
        y = payoff(rng);
      } while (x == y);
      a(i, j) = Trop(x);
      b(i, j) = Trop(y);
    }
  }
  Game g(std::move(a), std::move(b));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < m; ++i)
    if (coin(rng)) g = flip_row(g, i);
  for (std::size_t j = 0; j < n; ++j)
    if (coin(rng)) g = flip_col(g, j);
  return g;
}

}  // namespace tropsolve
