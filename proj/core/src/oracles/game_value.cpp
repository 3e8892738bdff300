#include "tropsolve/oracles/game_value.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <optional>
#include <string>

#include "tropsolve/errors.hpp"

namespace tropsolve::oracles {
namespace {

__extension__ using Wide = __int128;

struct Mean {
  std::int64_t num = 0;
  std::int64_t len = 1;  // > 0

  friend bool operator<(const Mean& a, const Mean& b) {
    return static_cast<Wide>(a.num) * b.len < static_cast<Wide>(b.num) * a.len;
  }
  friend bool operator<=(const Mean& a, const Mean& b) { return !(b < a); }
};

// Payoffs scaled to integers by the lcm of their denominators.
struct ScaledGame {
  std::size_t m = 0;
  std::size_t n = 0;
  std::int64_t scale = 1;
  std::vector<std::int64_t> a;  // m x n
  std::vector<std::int64_t> b;
  std::vector<std::vector<std::size_t>> square_moves;
  std::vector<std::vector<std::size_t>> circle_moves;

  explicit ScaledGame(const Game& g) : m(g.squares()), n(g.circles()), a(m * n), b(m * n) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const Trop* x : {&g.a()(i, j), &g.b()(i, j)})
          if (x->is_finite()) {
            const std::int64_t d = x->value().finite.denominator();
            std::int64_t l = 0;
            if (__builtin_mul_overflow(scale / boost::integer::gcd(scale, d), d, &l))
              fail(ErrorCode::SizeLimit, "payoff denominators too large");
            scale = l;
          }
    square_moves.resize(m);
    circle_moves.resize(n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (g.a()(i, j).is_finite()) {
          a[i * n + j] = scaled(g.a()(i, j).value().finite);
          square_moves[i].push_back(j);
        }
        if (g.b()(i, j).is_finite()) {
          b[i * n + j] = scaled(g.b()(i, j).value().finite);
          circle_moves[j].push_back(i);
        }
      }
    }
  }

  std::int64_t scaled(const Rational& r) const {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(r.numerator(), scale / r.denominator(), &out))
      fail(ErrorCode::SizeLimit, "scaled payoff overflows");
    return out;
  }

  Mean play(const std::vector<std::size_t>& sigma, const std::vector<std::size_t>& tau, std::size_t start,
            std::vector<std::int64_t>& seen, std::vector<std::int64_t>& prefix) const {
    std::fill(seen.begin(), seen.end(), -1);
    prefix.clear();
    prefix.push_back(0);
    std::size_t c = start;
    for (std::int64_t t = 0;; ++t) {
      if (seen[c] >= 0) return {prefix.back() - prefix[static_cast<std::size_t>(seen[c])], t - seen[c]};
      seen[c] = t;
      const std::size_t i = tau[c];
      const std::size_t next = sigma[i];
      prefix.push_back(prefix.back() - b[i * n + c] + a[i * n + next]);
      c = next;
    }
  }
};

bool advance(std::vector<std::size_t>& choice, std::vector<std::size_t>& digit,
             const std::vector<std::vector<std::size_t>>& moves) {
  for (std::size_t k = 0; k < digit.size(); ++k) {
    if (++digit[k] < moves[k].size()) {
      choice[k] = moves[k][digit[k]];
      return true;
    }
    digit[k] = 0;
    choice[k] = moves[k][0];
  }
  return false;
}

}  // namespace

Rational play_mean(const Game& g, const StrategyPair& s, std::size_t initial) {
  if (initial >= g.circles()) fail(ErrorCode::IndexOutOfRange, "initial circle out of range");
  if (s.sigma.size() != g.squares() || s.tau.size() != g.circles())
    fail(ErrorCode::DimensionMismatch, "strategy sizes do not match the game");
  for (std::size_t i = 0; i < g.squares(); ++i)
    if (s.sigma[i] >= g.circles() || g.a()(i, s.sigma[i]).is_neg_inf())
      fail(ErrorCode::MissingArc, "sigma uses a missing arc at square " + std::to_string(i + 1));
  for (std::size_t j = 0; j < g.circles(); ++j)
    if (s.tau[j] >= g.squares() || g.b()(s.tau[j], j).is_neg_inf())
      fail(ErrorCode::MissingArc, "tau uses a missing arc at circle " + std::to_string(j + 1));
  const ScaledGame sg(g);
  std::vector<std::int64_t> seen(g.circles());
  std::vector<std::int64_t> prefix;
  const Mean mean = sg.play(s.sigma, s.tau, initial, seen, prefix);
  return Rational(mean.num) / Rational(mean.len) / Rational(sg.scale);
}

Rational game_value(const Game& g, std::size_t initial) {
  if (initial >= g.circles()) fail(ErrorCode::IndexOutOfRange, "initial circle out of range");
  const ScaledGame sg(g);
  double pairs = 1;
  for (const auto& mv : sg.square_moves) pairs *= static_cast<double>(mv.size());
  for (const auto& mv : sg.circle_moves) pairs *= static_cast<double>(mv.size());
  if (pairs > kGameValueLimit)
    fail(ErrorCode::SizeLimit, "strategy enumeration needs more than 1e7 pairs");

  std::vector<std::size_t> sigma(sg.m);
  std::vector<std::size_t> sigma_digit(sg.m, 0);
  for (std::size_t i = 0; i < sg.m; ++i) sigma[i] = sg.square_moves[i][0];
  std::vector<std::int64_t> seen(sg.n);
  std::vector<std::int64_t> prefix;

  std::optional<Mean> best;
  do {
    std::vector<std::size_t> tau(sg.n);
    std::vector<std::size_t> tau_digit(sg.n, 0);
    for (std::size_t j = 0; j < sg.n; ++j) tau[j] = sg.circle_moves[j][0];
    std::optional<Mean> worst;
    do {
      const Mean v = sg.play(sigma, tau, initial, seen, prefix);
      if (!worst || v < *worst) worst = v;
      if (best && *worst <= *best) break;  // this sigma cannot improve on best
    } while (advance(tau, tau_digit, sg.circle_moves));
    if (!best || *best < *worst) best = worst;
  } while (advance(sigma, sigma_digit, sg.square_moves));

  return Rational(best->num) / Rational(best->len) / Rational(sg.scale);
}

}  // namespace tropsolve::oracles
