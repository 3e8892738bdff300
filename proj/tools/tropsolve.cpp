// tropsolve: mean payoff games and tropical feasibility from the command line.
//
// Exit codes: 0 winning / nonempty / checks passed, 1 losing / empty / check
// failed, 2 error (JSON object {"error", "message"} on stderr).

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "tropsolve/bench.hpp"
#include "tropsolve/io.hpp"
#include "tropsolve/oracles/game_value.hpp"
#include "tropsolve/selfcheck.hpp"

namespace {

using namespace tropsolve;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) fail(ErrorCode::ArgError, "expected a range lo..hi, got \"" + text + "\"");
  try {
    std::size_t used = 0;
    Range r;
    r.lo = std::stoll(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const std::string rest = text.substr(dots + 2);
    r.hi = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (r.hi < r.lo) fail(ErrorCode::ArgError, "empty range \"" + text + "\"");
    return r;
  } catch (const std::logic_error&) {
    fail(ErrorCode::ArgError, "malformed range \"" + text + "\"");
  }
}

std::string witness_text(const TropVec& x) {
  std::string out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) out += ' ';
    out += io::format_trop(x[j]);
  }
  return out;
}

struct SolveArgs {
  std::string file;
  std::size_t initial = 0;
  bool oracle = false;
  std::string trace;
};

int cmd_solve(const SolveArgs& args) {
  const io::GameFile gf = io::parse_game(io::read_file(args.file));
  std::size_t initial = 0;
  if (args.initial > 0) {
    if (args.initial > gf.game.circles()) fail(ErrorCode::IndexOutOfRange, "--initial must be in 1..n");
    initial = args.initial - 1;
  } else if (gf.initial) {
    initial = *gf.initial;
  } else {
    fail(ErrorCode::ArgError, "no initial circle: pass --initial or set \"initial\" in the game file");
  }

  if (args.oracle) {
    const Rational chi = oracles::game_value(gf.game, initial);
    const bool win = chi >= 0;
    std::cout << (win ? "WINNING" : "LOSING") << "\nchi = " << to_string(chi) << "\n";
    return win ? kExitYes : kExitNo;
  }
  const PcbcResult res = solve_game(gf.game, initial);
  if (!args.trace.empty()) io::write_file(args.trace, io::format_trace(res.trace));
  const bool win = res.status == Feasibility::NonEmpty;
  std::cout << (win ? "WINNING" : "LOSING") << "\npivots = " << res.trace.total_pivots << "\n";
  return win ? kExitYes : kExitNo;
}

struct FeasibleArgs {
  std::string file;
  std::string trace;
};

int cmd_feasible(const FeasibleArgs& args) {
  const TropLP lp = io::parse_lp(io::read_file(args.file));
  const PcbcResult res = trop_pcbc(lp);
  if (!args.trace.empty()) io::write_file(args.trace, io::format_trace(res.trace));
  if (res.status == Feasibility::NonEmpty) {
    std::cout << "NONEMPTY\nwitness: " << witness_text(*res.witness) << "\n";
    return kExitYes;
  }
  std::cout << "EMPTY\n";
  return kExitNo;
}

struct GenArgs {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string range = "-1000000..1000000";
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  if (args.m == 0 || args.n == 0) fail(ErrorCode::ArgError, "--m and --n must be positive");
  const Range r = parse_range(args.range);
  if (args.out.empty() && args.count != 1) fail(ErrorCode::ArgError, "--count > 1 needs --out");
  if (!args.out.empty()) std::filesystem::create_directories(args.out);
  for (std::size_t k = 0; k < args.count; ++k) {
    const std::uint64_t seed = args.count == 1 ? args.seed : bench::derive_seed(args.seed, args.m, k);
    const Game g = random_game(args.m, args.n, PayoffRange{r.lo, r.hi}, seed);
    const std::string text = io::format_game(g, args.n - 1);
    if (args.out.empty()) {
      std::cout << text;
    } else {
      const auto path = std::filesystem::path(args.out) / ("game_" + std::to_string(k + 1) + ".json");
      io::write_file(path.string(), text);
    }
  }
  return kExitYes;
}

struct BenchArgs {
  std::string sizes = "3..10";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string out;
  std::string range = "-1000000..1000000";
  std::size_t threads = 0;
};

int cmd_bench(const BenchArgs& args) {
  const Range sizes = parse_range(args.sizes);
  const Range payoff = parse_range(args.range);
  if (sizes.lo < 1) fail(ErrorCode::ArgError, "sizes must be positive");
  bench::BenchConfig cfg;
  cfg.size_lo = static_cast<std::size_t>(sizes.lo);
  cfg.size_hi = static_cast<std::size_t>(sizes.hi);
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.range = PayoffRange{payoff.lo, payoff.hi};
  cfg.threads = args.threads ? std::min(args.threads, bench::thread_count_from_env())
                             : bench::thread_count_from_env();
  const auto records = bench::run_bench(cfg);
  const std::string csv = bench::bench_csv(records);
  if (args.out.empty())
    std::cout << csv;
  else
    io::write_file(args.out, csv);
  std::cout << bench::format_summary(bench::summarize(records));
  return kExitYes;
}

struct SelfcheckArgs {
  selfcheck::Options opt;
};

int cmd_selfcheck(const SelfcheckArgs& args) {
  bool ok = true;
  for (const auto& r : selfcheck::run_all(args.opt)) {
    std::cout << selfcheck::format(r) << "\n";
    ok = ok && r.passed();
  }
  return ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mean payoff games via tropical shadow-vertex feasibility"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Decide whether an initial circle is winning for Max");
  s->add_option("game", solve.file, "Game JSON file")->required();
  s->add_option("--initial", solve.initial, "Initial circle (1-based)");
  s->add_flag("--oracle", solve.oracle, "Use strategy enumeration and print the value");
  s->add_option("--trace", solve.trace, "Write the solver trace as JSON");

  FeasibleArgs feas;
  auto* f = app.add_subcommand("feasible", "Decide emptiness of a tropical polyhedron");
  f->add_option("lp", feas.file, "Tropical LP JSON file")->required();
  f->add_option("--trace", feas.trace, "Write the solver trace as JSON");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate flip-invariant random games");
  g->add_option("--m", gen.m, "Square nodes")->required();
  g->add_option("--n", gen.n, "Circle nodes")->required();
  g->add_option("--range", gen.range, "Payoff range lo..hi");
  g->add_option("--seed", gen.seed, "Seed");
  g->add_option("--count", gen.count, "Number of games");
  g->add_option("--out", gen.out, "Output directory (stdout if omitted)");

  BenchArgs bench_args;
  auto* b = app.add_subcommand("bench", "Pivot counts on random square games");
  b->add_option("--sizes", bench_args.sizes, "Sizes a..b (m = n)");
  b->add_option("--trials", bench_args.trials, "Trials per size");
  b->add_option("--seed", bench_args.seed, "Seed");
  b->add_option("--out", bench_args.out, "CSV output file (stdout if omitted)");
  b->add_option("--range", bench_args.range, "Payoff range lo..hi");
  b->add_option("--threads", bench_args.threads, "Worker threads (capped by TROPSOLVE_THREADS)");

  SelfcheckArgs check;
  auto* c = app.add_subcommand("selfcheck", "Run the oracle agreement checks");
  c->add_option("--determinants", check.opt.determinants, "Random determinants");
  c->add_option("--contexts", check.opt.contexts, "Leaving-rule contexts");
  c->add_option("--games", check.opt.games, "Games for the decision check");
  c->add_option("--paths", check.opt.paths, "Instances for the trace check");
  c->add_option("--seed", check.opt.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << io::format_error(ErrorCode::ArgError, e.what()) << "\n";
    return kExitError;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*f) return cmd_feasible(feas);
    if (*g) return cmd_gen(gen);
    if (*b) return cmd_bench(bench_args);
    if (*c) return cmd_selfcheck(check);
  } catch (const Error& e) {
    std::cerr << io::format_error(e.code(), e.what()) << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << io::format_error(ErrorCode::IoError, e.what()) << "\n";
    return kExitError;
  }
  return kExitError;
}
