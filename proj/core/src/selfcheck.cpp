#include "tropsolve/selfcheck.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

#include "tropsolve/assignment.hpp"
#include "tropsolve/linalg.hpp"
#include "tropsolve/oracles/game_value.hpp"
#include "tropsolve/oracles/leaving_rule.hpp"
#include "tropsolve/oracles/pcbc_trace.hpp"

namespace tropsolve::selfcheck {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxMismatches = 5;

void mismatch(CheckReport& r, const std::string& what) {
  if (r.mismatches.size() < kMaxMismatches) r.mismatches.push_back(what);
  else if (r.mismatches.size() == kMaxMismatches) r.mismatches.push_back("...");
}

std::string describe(const std::optional<BasisElem>& e) { return e ? to_string(*e) : "None"; }

std::string matrix_text(const SignedMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os.str();
}

// Brute-force tdet: nullopt when the assignment is not unique or not finite.
std::optional<SignedTrop> brute_tdet(const SignedMatrix& m) {
  const auto res = brute_force_assignment(modulus_matrix(m));
  if (res.weight.is_neg_inf() || !res.unique) return std::nullopt;
  int sign = permutation_parity(res.permutation);
  for (std::size_t i = 0; i < m.rows(); ++i) sign *= m(i, res.permutation[i]).sign();
  return SignedTrop(res.weight, sign);
}

std::optional<SignedTrop> fast_tdet(const SignedMatrix& m) {
  try {
    return tdet(m);
  } catch (const NotGenericError&) {
    return std::nullopt;
  }
}

Game random_small_game(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  const std::size_t m = size(rng);
  const std::size_t n = size(rng);
  return random_game(m, n, PayoffRange{-1000, 1000}, rng());
}

Basis random_basis(std::mt19937_64& rng, std::size_t p, std::size_t n) {
  std::vector<std::size_t> rows(p);
  std::iota(rows.begin(), rows.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::uniform_int_distribution<std::size_t> take(0, std::min(p, n));
  rows.resize(take(rng));
  std::sort(rows.begin(), rows.end());
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(cols.begin(), cols.end(), rng);
  cols.resize(n - rows.size());
  std::sort(cols.begin(), cols.end());
  return Basis{rows, cols};
}

}  // namespace

std::string format(const CheckReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.agreed << "/" << r.trials << " agreed, "
     << r.skipped << " non-generic skipped, " << r.seconds << " s";
  for (const auto& m : r.mismatches) os << "\n  mismatch: " << m;
  return os.str();
}

SignedMatrix random_signed_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::int64_t lo,
                                  std::int64_t hi, double zero_prob, double eps_row_prob) {
  std::uniform_int_distribution<std::int64_t> modulus(lo, hi);
  std::bernoulli_distribution zero(zero_prob);
  std::bernoulli_distribution eps_row(eps_row_prob);
  std::bernoulli_distribution negative(0.5);
  std::uniform_int_distribution<std::int64_t> degree(1, static_cast<std::int64_t>(std::max<std::size_t>(cols, 1)));
  SignedMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool with_eps = eps_row(rng);
    for (std::size_t j = 0; j < cols; ++j) {
      if (zero(rng)) continue;
      const EpsVal v(Rational(modulus(rng)), with_eps ? degree(rng) : 0);
      m(i, j) = SignedTrop(Trop(v), negative(rng) ? -1 : 1);
    }
  }
  return m;
}

CheckReport check_determinants(std::size_t trials, std::uint64_t seed) {
  CheckReport r;
  r.name = "tdet vs brute force";
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(0, 7);
  std::uniform_int_distribution<int> sparse(0, 3);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = size(rng);
    const double zero_prob = sparse(rng) == 0 ? 0.4 : 0.0;
    const SignedMatrix m = random_signed_matrix(rng, n, n, -50, 50, zero_prob, 0.3);
    ++r.trials;
    const auto expected = brute_tdet(m);
    const auto got = fast_tdet(m);
    if (expected == got) {
      ++r.agreed;
    } else {
      mismatch(r, "[" + matrix_text(m) + "]: brute " + (expected ? to_string(*expected) : "NotGeneric") +
                      ", tdet " + (got ? to_string(*got) : "NotGeneric"));
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

CheckReport check_leaving_rule(std::size_t contexts, std::uint64_t seed) {
  CheckReport r;
  r.name = "leaving rule vs lift oracle";
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);

  auto compare = [&](const RuleContext& ctx, const Basis& basis) {
    std::optional<BasisElem> trop;
    std::optional<BasisElem> lift;
    try {
      trop = leaving_variable(ctx, basis);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotGeneric) {
        ++r.skipped;
        return;
      }
      mismatch(r, std::string("tropical rule raised: ") + e.what());
      ++r.trials;
      return;
    }
    ++r.trials;
    try {
      lift = oracles::oracle_leaving_variable(ctx, basis);
    } catch (const Error& e) {
      mismatch(r, std::string("oracle raised: ") + e.what());
      return;
    }
    if (trop == lift)
      ++r.agreed;
    else
      mismatch(r, "basis " + to_string(basis) + " of [" + matrix_text(ctx.matrix()) + "]: tropical " +
                      describe(trop) + ", oracle " + describe(lift));
  };

  while (r.trials < contexts) {
    const Game g = random_small_game(rng, 1, 7);
    const WMatrix w = build_w(g);
    if (w.entries.cols() < 2 || w.entries.cols() > 7) continue;
    std::uniform_int_distribution<std::size_t> pick(0, w.entries.cols() - 1);
    const TropLP lp = to_feasibility_instance(w, pick(rng));
    // Contexts visited by the solver.
    const LeavingRule spy = [&](const RuleContext& ctx, const Basis& basis) {
      if (strong_nondegeneracy_check(ctx.matrix()).generic && r.trials < contexts) compare(ctx, basis);
      return leaving_variable(ctx, basis);
    };
    try {
      run_pcbc(lp, spy);
    } catch (const Error&) {
    }
    // Random bases of random phases.
    for (std::size_t k = 0; k < lp.rows() && r.trials < contexts; ++k) {
      const RuleContext ctx = RuleContext::for_phase(lp, k);
      if (!strong_nondegeneracy_check(ctx.matrix()).generic) continue;
      compare(ctx, random_basis(rng, k, lp.cols()));
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

CheckReport check_decisions(std::size_t games, std::uint64_t seed) {
  CheckReport r;
  r.name = "is_winning vs game value";
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < games; ++t) {
    const Game g = random_small_game(rng, 1, 5);
    std::uniform_int_distribution<std::size_t> pick(0, g.circles() - 1);
    const std::size_t j = pick(rng);
    ++r.trials;
    bool win = false;
    try {
      win = is_winning(g, j);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotGeneric) {
        ++r.skipped;
        continue;
      }
      mismatch(r, std::string("solver raised: ") + e.what());
      continue;
    }
    const Rational chi = oracles::game_value(g, j);
    if (win == (chi >= 0))
      ++r.agreed;
    else
      mismatch(r, "seed trial " + std::to_string(t) + ": solver " + (win ? "winning" : "losing") + ", value " +
                      to_string(chi));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

CheckReport check_paths(std::size_t instances, std::uint64_t seed) {
  CheckReport r;
  r.name = "solver trace vs oracle trace";
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const Game g = random_small_game(rng, 1, 4);
    std::uniform_int_distribution<std::size_t> pick(0, g.circles() - 1);
    const TropLP lp = to_feasibility_instance(build_w(g), pick(rng));
    ++r.trials;
    SolveTrace trop;
    try {
      trop = trop_pcbc(lp).trace;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotGeneric) {
        ++r.skipped;
        continue;
      }
      mismatch(r, std::string("solver raised: ") + e.what());
      continue;
    }
    SolveTrace lift;
    try {
      lift = oracles::oracle_pcbc_trace(lp);
    } catch (const Error& e) {
      mismatch(r, std::string("oracle raised: ") + e.what());
      continue;
    }
    if (trop == lift)
      ++r.agreed;
    else
      mismatch(r, "instance " + std::to_string(t) + ": traces differ");
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<CheckReport> run_all(const Options& opt) {
  return {check_determinants(opt.determinants, opt.seed), check_leaving_rule(opt.contexts, opt.seed + 1),
          check_decisions(opt.games, opt.seed + 2), check_paths(opt.paths, opt.seed + 3)};
}

}  // namespace tropsolve::selfcheck
