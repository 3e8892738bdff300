#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropsolve/games.hpp"

namespace tropsolve::bench {

struct BenchConfig {
  std::size_t size_lo = 3;
  std::size_t size_hi = 10;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  PayoffRange range;
  std::size_t threads = 1;
};

enum class TrialResult { Win, Lose, Error };
std::string_view to_string(TrialResult r);

struct BenchRecord {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  TrialResult result = TrialResult::Error;
  std::size_t pivots = 0;
  std::size_t phases = 0;  // phases that ran the pivoting loop
  std::int64_t runtime_us = 0;
};

struct SizeSummary {
  std::size_t n = 0;
  std::size_t solved = 0;
  std::size_t errors = 0;
  double mean_pivots = 0;
};

struct BenchSummary {
  std::vector<SizeSummary> sizes;
  /// Least-squares slope of log(mean pivots) against log(n).
  double slope = 0;
};

/// splitmix64 mix of (seed, m, trial).
std::uint64_t derive_seed(std::uint64_t seed, std::size_t m, std::size_t trial);

/// TROPSOLVE_THREADS if set and positive, else hardware concurrency (>= 1).
std::size_t thread_count_from_env();

/// One square game of size m = n per trial, decided from the last circle.
/// Records are ordered by (size, trial) regardless of the thread count.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

std::string bench_csv(std::span<const BenchRecord> records, bool with_runtime = true);
BenchSummary summarize(std::span<const BenchRecord> records);
std::string format_summary(const BenchSummary& s);

/// Slope of the least-squares line through (log x, log y); pairs with a
/// nonpositive coordinate are skipped. NaN with fewer than two points.
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace tropsolve::bench
