#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include <json.hpp>

#include "support.hpp"
#include "tropsolve/linalg.hpp"
#include "tropsolve/io.hpp"

namespace tropsolve {
namespace {

using io::format_signed;
using io::parse_signed;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  return Rational(num(rng), den(rng));
}

SignedTrop random_signed(std::mt19937_64& rng) {
  if (std::bernoulli_distribution(0.15)(rng)) return SignedTrop::zero();
  return SignedTrop(Trop(random_rational(rng)), std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
}

Game random_sparse_game(std::mt19937_64& rng) {
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  TropMatrix a(m, n), b(m, n);
  std::bernoulli_distribution missing(0.3);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!missing(rng)) a(i, j) = Trop(random_rational(rng));
      if (!missing(rng)) b(i, j) = Trop(random_rational(rng));
    }
  // Keep every node alive.
  for (std::size_t i = 0; i < m; ++i) a(i, i % n) = Trop(random_rational(rng));
  for (std::size_t j = 0; j < n; ++j) b(j % m, j) = Trop(random_rational(rng));
  return Game(a, b);
}

TEST(Scalars, Examples) {
  EXPECT_EQ(parse_signed("3"), SignedTrop::pos(Trop(3)));
  EXPECT_EQ(parse_signed("~4"), SignedTrop::neg(Trop(4)));
  EXPECT_EQ(parse_signed("~-1/2"), SignedTrop::neg(Trop(Rational(-1, 2))));
  EXPECT_EQ(parse_signed(" -inf "), SignedTrop::zero());
  EXPECT_EQ(format_signed(SignedTrop::neg(Trop(Rational(7, 3)))), "~7/3");
  EXPECT_EQ(format_signed(SignedTrop::zero()), "-inf");
  EXPECT_EQ(io::format_trop(Trop(Rational(-2))), "-2");
  EXPECT_EQ(io::parse_trop("5/10"), Trop(Rational(1, 2)));
}

TEST(Scalars, Malformed) {
  for (const char* bad : {"~~3", "", "~", "3x", "1/0", "~-inf", "inf", "1//2"})
    EXPECT_EQ(code_of([&] { parse_signed(bad); }), ErrorCode::ParseError) << bad;
  EXPECT_EQ(code_of([] { io::parse_trop("~3"); }), ErrorCode::ParseError);
  try {
    parse_signed("~~3");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("~~3"), std::string::npos) << e.what();
  }
}

TEST(Scalars, EpsTermsHaveNoEncoding) {
  const Trop eps(EpsVal::eps_power(1));
  EXPECT_EQ(code_of([&] { io::format_trop(eps); }), ErrorCode::ArgError);
  EXPECT_EQ(code_of([&] { format_signed(SignedTrop::neg(eps)); }), ErrorCode::ArgError);
}

TEST(Scalars, RoundTrip) {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 1000; ++t) {
    const SignedTrop x = random_signed(rng);
    EXPECT_EQ(parse_signed(format_signed(x)), x);
    EXPECT_EQ(io::parse_trop(io::format_trop(x.modulus())), x.modulus());
  }
}

TEST(MatrixText, Shapes) {
  const SignedMatrix m = testing::mat("3 ~2; 1 -inf");
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(m(0, 1), SignedTrop::neg(Trop(2)));
  EXPECT_TRUE(m(1, 1).is_zero());
  EXPECT_EQ(code_of([] { io::parse_signed_matrix("1 2; 3"); }), ErrorCode::ParseError);
  EXPECT_EQ(testing::vec("1 ~2").size(), 2u);
}

TEST(GameFile, FixtureLayout) {
  const std::string text = R"({"m": 1, "n": 2, "A": [[7, 2]], "B": [["5", "3"]], "initial": 2})";
  const io::GameFile f = io::parse_game(text);
  EXPECT_EQ(f.game, testing::one_by_two_game());
  EXPECT_EQ(f.initial, 1u);
  const io::GameFile bare = io::parse_game(R"({"m": 1, "n": 1, "A": [["1/2"]], "B": [[3]]})");
  EXPECT_FALSE(bare.initial.has_value());
  EXPECT_EQ(bare.game.a()(0, 0), Trop(Rational(1, 2)));
}

TEST(GameFile, Errors) {
  EXPECT_EQ(code_of([] { io::parse_game("{"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_game(R"({"m": 1, "n": 1, "A": [[1]]})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_game(R"({"m": 1, "n": 2, "A": [[1]], "B": [[1, 2]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_game(R"({"m": 1, "n": 1, "A": [[1.5]], "B": [[1]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_game(R"({"m": 1, "n": 1, "A": [[1]], "B": [[2]], "initial": 0})"); }),
            ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { io::parse_game(R"({"m": 1, "n": 1, "A": [["-inf"]], "B": [[2]]})"); }),
            ErrorCode::InvalidGame);
}

TEST(GameFile, RoundTrip) {
  std::mt19937_64 rng(92);
  for (int t = 0; t < 1000; ++t) {
    const Game g = random_sparse_game(rng);
    std::optional<std::size_t> initial;
    if (t % 2) initial = std::uniform_int_distribution<std::size_t>(0, g.circles() - 1)(rng);
    const io::GameFile back = io::parse_game(io::format_game(g, initial));
    EXPECT_EQ(back.game, g);
    EXPECT_EQ(back.initial, initial);
  }
}

TEST(LpFile, RoundTrip) {
  std::mt19937_64 rng(93);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    SignedMatrix a(m, n);
    SignedVec b;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_signed(rng);
      b.push_back(random_signed(rng));
    }
    const TropLP lp(a, b);
    const TropLP back = io::parse_lp(io::format_lp(lp));
    EXPECT_EQ(back.a(), lp.a());
    EXPECT_EQ(back.b(), lp.b());
    EXPECT_EQ(back.cols(), n);
  }
}

TEST(LpFile, Errors) {
  EXPECT_EQ(code_of([] { io::parse_lp(R"({"n": 2, "rows": [{"a": ["1"], "b": "0"}]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_lp(R"({"n": 1, "rows": [{"a": ["~~1"], "b": "0"}]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_lp(R"({"rows": []})"); }), ErrorCode::ParseError);
}

TEST(TraceFile, RoundTripOfSolverTraces) {
  std::mt19937_64 rng(94);
  for (int t = 0; t < 1000; ++t) {
    const TropLP lp = testing::random_game_lp(rng, 5, 5);
    SolveTrace trace;
    try {
      trace = trop_pcbc(lp).trace;
    } catch (const NotGenericError&) {
      continue;
    }
    EXPECT_EQ(io::parse_trace(io::format_trace(trace)), trace);
  }
}

TEST(TraceFile, IndicesAreOneBased) {
  const SolveTrace trace = trop_pcbc(testing::five_row_lp()).trace;
  const auto doc = nlohmann::json::parse(io::format_trace(trace));
  EXPECT_EQ(doc["result"], "nonempty");
  EXPECT_EQ(doc["phases"][0]["constraint"], 1);
  EXPECT_EQ(doc["phases"][0]["bases"][0]["J"], nlohmann::json::array({1, 2}));
  EXPECT_EQ(code_of([] {
              io::parse_trace(R"({"result": "empty", "total_pivots": 0,
                "phases": [{"constraint": 0, "outcome": "entered", "bases": []}]})");
            }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_trace(R"({"result": 3, "total_pivots": 0, "phases": []})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_trace(R"({"result": "maybe", "total_pivots": 0, "phases": []})"); }),
            ErrorCode::ParseError);
}

TEST(ErrorJson, CodeAndMessage) {
  const auto doc = nlohmann::json::parse(io::format_error(ErrorCode::TiedPayoff, "tie at (1, 2)"));
  EXPECT_EQ(doc["error"], std::string(to_string(ErrorCode::TiedPayoff)));
  EXPECT_EQ(doc["message"], "tie at (1, 2)");
}

TEST(Files, ReadWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "tropsolve_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "x.json").string();
  io::write_file(path, "{\"a\": 1}\n");
  EXPECT_EQ(io::read_file(path), "{\"a\": 1}\n");
  std::filesystem::remove_all(dir);
  EXPECT_EQ(code_of([&] { io::read_file(path); }), ErrorCode::IoError);
  EXPECT_EQ(code_of([&] { io::write_file((dir / "missing" / "y").string(), "x"); }), ErrorCode::IoError);
}

}  // namespace
}  // namespace tropsolve
