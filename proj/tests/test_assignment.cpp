#include <gtest/gtest.h>

#include <random>

#include "tropsolve/assignment.hpp"

namespace tropsolve {
namespace {

TropMatrix int_matrix(std::initializer_list<std::initializer_list<Trop>> rows) { return TropMatrix(rows); }

TropMatrix random_weights(std::mt19937_64& rng, std::size_t r, bool with_eps, double neg_inf_prob) {
  std::uniform_int_distribution<std::int64_t> w(-6, 6);
  std::uniform_int_distribution<std::int64_t> e(0, 3);
  std::bernoulli_distribution missing(neg_inf_prob);
  TropMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (!missing(rng)) m(i, j) = Trop(EpsVal(Rational(w(rng)), with_eps ? e(rng) : 0));
  return m;
}

bool is_permutation_of_r(const std::vector<std::size_t>& p, std::size_t r) {
  std::vector<char> seen(r, 0);
  if (p.size() != r) return false;
  for (auto x : p) {
    if (x >= r || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

TEST(MaxAssignment, TextbookExample) {
  const auto res = max_assignment(int_matrix({{3, 1}, {2, 1}}));
  EXPECT_EQ(res.permutation, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(res.weight, Trop(4));
  EXPECT_TRUE(res.unique);
}

TEST(MaxAssignment, OnlyDiagonalFinite) {
  const Trop z = Trop::neg_inf();
  const auto res = max_assignment(int_matrix({{0, z}, {z, 0}}));
  EXPECT_EQ(res.permutation, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(res.weight, Trop(0));
  EXPECT_TRUE(res.unique);
}

TEST(MaxAssignment, TieIsNotUniqueAndYieldsAlternative) {
  const auto res = max_assignment(int_matrix({{1, 1}, {1, 1}}));
  EXPECT_EQ(res.weight, Trop(2));
  EXPECT_FALSE(res.unique);
  ASSERT_TRUE(is_permutation_of_r(res.alternative, 2));
  EXPECT_NE(res.alternative, res.permutation);
  EXPECT_EQ(assignment_weight(int_matrix({{1, 1}, {1, 1}}), res.alternative), Trop(2));
}

TEST(MaxAssignment, NoFiniteAssignment) {
  const auto res = max_assignment(int_matrix({{Trop::neg_inf()}}));
  EXPECT_TRUE(res.weight.is_neg_inf());
  EXPECT_FALSE(res.unique);
  const Trop z = Trop::neg_inf();
  EXPECT_TRUE(max_assignment(int_matrix({{1, 2}, {z, z}})).weight.is_neg_inf());
}

TEST(MaxAssignment, EmptyMatrixHasUnitWeight) {
  const auto res = max_assignment(TropMatrix(0, 0));
  EXPECT_EQ(res.weight, Trop::unit());
  EXPECT_TRUE(res.unique);
}

TEST(MaxAssignment, RationalWeightsAndEpsDegrees) {
  const TropMatrix m = int_matrix({{Trop(Rational(1, 3)), Trop(EpsVal(Rational(5), 1))},
                                   {Trop(EpsVal(Rational(0), 2)), Trop(Rational(-1, 2))}});
  const auto res = max_assignment(m);
  EXPECT_EQ(res.permutation, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(res.weight, Trop(Rational(-1, 6)));
  EXPECT_TRUE(res.unique);
}

TEST(BruteForceAssignment, MatchesTextbookAndLimit) {
  const auto res = brute_force_assignment(int_matrix({{3, 1}, {2, 1}}));
  EXPECT_EQ(res.weight, Trop(4));
  EXPECT_TRUE(res.unique);
  try {
    brute_force_assignment(TropMatrix(9, 9, Trop(0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
}

TEST(Parity, Basics) {
  EXPECT_EQ(permutation_parity(std::vector<std::size_t>{}), 1);
  EXPECT_EQ(permutation_parity(std::vector<std::size_t>{1, 0}), -1);
  EXPECT_EQ(permutation_parity(std::vector<std::size_t>{1, 2, 0}), 1);
  EXPECT_EQ(permutation_parity(std::vector<std::size_t>{0, 2, 1, 3}), -1);
}

struct AgreementCase {
  bool with_eps;
  double neg_inf_prob;
  std::uint64_t seed;
};

class AgreesWithBruteForce : public ::testing::TestWithParam<AgreementCase> {};

TEST_P(AgreesWithBruteForce, WeightUniquenessAndPermutation) {
  const auto c = GetParam();
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int t = 0; t < 1000; ++t) {
    const TropMatrix w = random_weights(rng, size(rng), c.with_eps, c.neg_inf_prob);
    const auto fast = max_assignment(w);
    const auto brute = brute_force_assignment(w);
    ASSERT_EQ(fast.weight, brute.weight);
    if (brute.weight.is_neg_inf()) continue;
    ASSERT_EQ(fast.unique, brute.unique);
    ASSERT_TRUE(is_permutation_of_r(fast.permutation, w.rows()));
    EXPECT_EQ(assignment_weight(w, fast.permutation), fast.weight);
    if (brute.unique) {
      EXPECT_EQ(fast.permutation, brute.permutation);
    } else {
      ASSERT_TRUE(is_permutation_of_r(fast.alternative, w.rows()));
      EXPECT_NE(fast.alternative, fast.permutation);
      EXPECT_EQ(assignment_weight(w, fast.alternative), fast.weight);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(RandomMatrices, AgreesWithBruteForce,
                         ::testing::Values(AgreementCase{false, 0.0, 101}, AgreementCase{true, 0.0, 102},
                                           AgreementCase{false, 0.3, 103}, AgreementCase{true, 0.3, 104}));

TEST(MaxAssignment, RowShiftShiftsWeightAndKeepsArgmax) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::uniform_int_distribution<std::int64_t> shift(-20, 20);
  for (int t = 0; t < 500; ++t) {
    const std::size_t r = size(rng);
    TropMatrix w = random_weights(rng, r, true, 0.1);
    const auto before = brute_force_assignment(w);
    const std::size_t row = std::uniform_int_distribution<std::size_t>(0, r - 1)(rng);
    const Rational c(shift(rng));
    for (std::size_t j = 0; j < r; ++j)
      if (w(row, j).is_finite()) w(row, j) = Trop(w(row, j).value() + EpsVal(c));
    const auto after = max_assignment(w);
    if (before.weight.is_neg_inf()) {
      EXPECT_TRUE(after.weight.is_neg_inf());
      continue;
    }
    EXPECT_EQ(after.weight, Trop(before.weight.value() + EpsVal(c)));
    EXPECT_EQ(after.unique, before.unique);
    if (before.unique) EXPECT_EQ(after.permutation, before.permutation);
  }
}

TEST(MaxAssignment, SoleFiniteEntryIsAlwaysMatched) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  for (int t = 0; t < 500; ++t) {
    const std::size_t r = size(rng);
    TropMatrix w = random_weights(rng, r, false, 0.0);
    const std::size_t row = std::uniform_int_distribution<std::size_t>(0, r - 1)(rng);
    const std::size_t col = std::uniform_int_distribution<std::size_t>(0, r - 1)(rng);
    for (std::size_t j = 0; j < r; ++j)
      if (j != col) w(row, j) = Trop::neg_inf();
    const auto res = max_assignment(w);
    ASSERT_FALSE(res.weight.is_neg_inf());
    EXPECT_EQ(res.permutation[row], col);
    if (!res.unique) EXPECT_EQ(res.alternative[row], col);
  }
}

}  // namespace
}  // namespace tropsolve
