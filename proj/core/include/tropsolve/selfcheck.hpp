#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tropsolve/games.hpp"

namespace tropsolve::selfcheck {

/// Outcome of one oracle-agreement check. Trials on which the instance turned
/// out non-generic are counted in `skipped` and not compared.
struct CheckReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t agreed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> mismatches;
  double seconds = 0;

  bool passed() const { return mismatches.empty() && agreed > 0; }
};

std::string format(const CheckReport& r);

/// Integer moduli in [lo, hi], random signs, -inf with probability
/// `zero_prob`; with probability `eps_row_prob` a row also gets eps degrees
/// in [1, cols].
SignedMatrix random_signed_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                  std::int64_t lo, std::int64_t hi, double zero_prob = 0.0,
                                  double eps_row_prob = 0.0);

/// tdet against brute-force permutation expansion, NotGeneric included
/// (square sizes 0..7, moduli in [-50, 50]).
CheckReport check_determinants(std::size_t trials, std::uint64_t seed);

/// Tropical leaving rule against the lift oracle on strongly non-degenerate
/// contexts (n <= 6) met along solver runs and at random bases.
CheckReport check_leaving_rule(std::size_t contexts, std::uint64_t seed);

/// is_winning against the sign of the strategy-enumeration game value
/// (m, n in [1, 5]).
CheckReport check_decisions(std::size_t games, std::uint64_t seed);

/// Solver trace against the trace driven by the lift oracle (m, n <= 4).
CheckReport check_paths(std::size_t instances, std::uint64_t seed);

struct Options {
  std::size_t determinants = 300;
  std::size_t contexts = 200;
  std::size_t games = 150;
  std::size_t paths = 100;
  std::uint64_t seed = 2024;
};

std::vector<CheckReport> run_all(const Options& opt);

}  // namespace tropsolve::selfcheck
