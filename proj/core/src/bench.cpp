#include "tropsolve/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

namespace tropsolve::bench {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

BenchRecord run_trial(const BenchConfig& cfg, std::size_t size, std::size_t trial) {
  BenchRecord rec;
  rec.m = size;
  rec.n = size;
  rec.trial = trial;
  rec.seed = derive_seed(cfg.seed, size, trial);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Game g = random_game(size, size, cfg.range, rec.seed);
    const PcbcResult res = solve_game(g, size - 1);
    rec.result = res.status == Feasibility::NonEmpty ? TrialResult::Win : TrialResult::Lose;
    rec.pivots = res.trace.total_pivots;
    for (const auto& ph : res.trace.phases)
      if (ph.outcome != PhaseOutcome::AlreadyFeasible) ++rec.phases;
  } catch (const Error&) {
    rec.result = TrialResult::Error;
  }
  rec.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rec;
}

}  // namespace

std::string_view to_string(TrialResult r) {
  switch (r) {
    case TrialResult::Win: return "win";
    case TrialResult::Lose: return "lose";
    case TrialResult::Error: return "error";
  }
  return "?";
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t m, std::size_t trial) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(m));
  return splitmix64(h ^ static_cast<std::uint64_t>(trial));
}

std::size_t thread_count_from_env() {
  if (const char* env = std::getenv("TROPSOLVE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  if (cfg.size_lo == 0 || cfg.size_hi < cfg.size_lo) fail(ErrorCode::ArgError, "sizes must satisfy 1 <= a <= b");
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t s = cfg.size_lo; s <= cfg.size_hi; ++s)
    for (std::size_t t = 0; t < cfg.trials; ++t) jobs.emplace_back(s, t);

  std::vector<BenchRecord> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) out[k] = run_trial(cfg, jobs[k].first, jobs[k].second);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, jobs.size()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return out;
}

std::string bench_csv(std::span<const BenchRecord> records, bool with_runtime) {
  std::ostringstream os;
  os << "m,n,trial,seed,result,pivots,phases,runtime_us\n";
  for (const auto& r : records)
    os << r.m << ',' << r.n << ',' << r.trial << ',' << r.seed << ',' << to_string(r.result) << ',' << r.pivots
       << ',' << r.phases << ',' << (with_runtime ? r.runtime_us : 0) << '\n';
  return os.str();
}

BenchSummary summarize(std::span<const BenchRecord> records) {
  std::map<std::size_t, SizeSummary> by_size;
  std::map<std::size_t, double> total;
  for (const auto& r : records) {
    auto& s = by_size[r.n];
    s.n = r.n;
    if (r.result == TrialResult::Error) {
      ++s.errors;
      continue;
    }
    ++s.solved;
    total[r.n] += static_cast<double>(r.pivots);
  }
  BenchSummary out;
  std::vector<double> xs;
  std::vector<double> ys;
  for (auto& [n, s] : by_size) {
    s.mean_pivots = s.solved ? total[n] / static_cast<double>(s.solved) : 0.0;
    out.sizes.push_back(s);
    xs.push_back(static_cast<double>(n));
    ys.push_back(s.mean_pivots);
  }
  out.slope = loglog_slope(xs, ys);
  return out;
}

std::string format_summary(const BenchSummary& s) {
  std::ostringstream os;
  os << "n,solved,errors,mean_pivots\n";
  for (const auto& z : s.sizes) os << z.n << ',' << z.solved << ',' << z.errors << ',' << z.mean_pivots << '\n';
  os << "loglog_slope," << s.slope << '\n';
  return os.str();
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (std::size_t a = 0; a < std::min(xs.size(), ys.size()); ++a) {
    if (xs[a] <= 0 || ys[a] <= 0) continue;
    const double lx = std::log(xs[a]);
    const double ly = std::log(ys[a]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++k;
  }
  const double denom = static_cast<double>(k) * sxx - sx * sx;
  if (k < 2 || denom == 0) return std::numeric_limits<double>::quiet_NaN();
  return (static_cast<double>(k) * sxy - sx * sy) / denom;
}

}  // namespace tropsolve::bench
