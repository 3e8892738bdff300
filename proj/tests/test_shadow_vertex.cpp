#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support.hpp"
#include "tropsolve/linalg.hpp"
#include "tropsolve/oracles/leaving_rule.hpp"
#include "tropsolve/shadow_vertex.hpp"

namespace tropsolve {
namespace {

using testing::mat;
using testing::sig;
using testing::vec;

struct Sample {
  RuleContext ctx;
  Basis basis;
};

RuleContext two_row_context() { return RuleContext(mat("0 1; 2 0"), vec("3 5")); }

// Strongly non-degenerate contexts with a random basis whose basis minor is
// generic.
std::vector<Sample> random_samples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  while (out.size() < count) {
    const TropLP lp = testing::random_game_lp(rng, 7, 7);
    if (lp.cols() == 0 || lp.rows() == 0) continue;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, lp.rows() - 1)(rng);
    RuleContext ctx = RuleContext::for_phase(lp, k);
    if (!strong_nondegeneracy_check(ctx.matrix()).generic) continue;
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    rows.resize(std::uniform_int_distribution<std::size_t>(0, std::min(k, lp.cols()))(rng));
    std::sort(rows.begin(), rows.end());
    std::vector<std::size_t> cols(lp.cols());
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    cols.resize(lp.cols() - rows.size());
    std::sort(cols.begin(), cols.end());
    out.push_back({std::move(ctx), Basis{rows, cols}});
  }
  return out;
}

TEST(RuleContext, StacksPrefixObjectiveAndCoObjective) {
  const RuleContext ctx = RuleContext::for_phase(testing::five_row_lp(), 2);
  EXPECT_EQ(ctx.prefix_rows(), 2u);
  EXPECT_EQ(ctx.matrix().rows(), 4u);
  EXPECT_EQ(ctx.matrix()(ctx.u_row(), 0), SignedTrop::pos(EpsVal::eps_power(1)));
  EXPECT_EQ(ctx.matrix()(ctx.u_row(), 1), SignedTrop::pos(EpsVal::eps_power(2)));
  EXPECT_EQ(ctx.matrix()(ctx.v_row(), 0), sig("~-3"));
  EXPECT_EQ(ctx.matrix()(1, 0), sig("~-10"));
}

TEST(Minor, SingleObjectiveEntry) {
  const RuleContext ctx = two_row_context();
  EXPECT_EQ(minor(ctx, {ctx.u_row()}, {1}), SignedTrop::pos(EpsVal::eps_power(2)));
}

TEST(Minor, ObjectiveRowMatchesSmallestColumn) {
  const RuleContext ctx = two_row_context();
  EXPECT_EQ(minor(ctx, {1, ctx.u_row()}, {0, 1}), SignedTrop::neg(EpsVal(Rational(0), 1)));
}

TEST(Minor, EmptyIsUnit) { EXPECT_EQ(minor(two_row_context(), {}, {}), sig("0")); }

TEST(LambdaSet, OneVariable) {
  const RuleContext up(SignedMatrix(0, 1), vec("0"));
  EXPECT_EQ(lambda_set(up, Basis::initial(1)), (std::vector<BasisElem>{BasisElem::col(0)}));
  const RuleContext down(SignedMatrix(0, 1), vec("~0"));
  EXPECT_TRUE(lambda_set(down, Basis::initial(1)).empty());
}

TEST(LambdaSet, WithExplicitSignConstants) {
  const RuleContext up(SignedMatrix(0, 1), vec("0"));
  const Basis b = Basis::initial(1);
  const SignConstants s = sign_constants(up, b);
  EXPECT_EQ(lambda_set(up, b, s), lambda_set(up, b));
  SignConstants flipped = s;
  for (auto& [e, v] : flipped) v = -v;
  EXPECT_TRUE(lambda_set(up, b, flipped).empty());
}

TEST(TPolySign, TwoRowExample) {
  const RuleContext ctx = two_row_context();
  const Basis b{{0, 1}, {}};
  const ReducedCosts rc(ctx, b);
  const auto r0 = BasisElem::row(0);
  const auto r1 = BasisElem::row(1);
  EXPECT_EQ(rc.q(r0), SignedTrop::neg(EpsVal(Rational(0), 1)));
  EXPECT_EQ(rc.r(r0), sig("7"));
  EXPECT_EQ(rc.q(r1), SignedTrop::neg(EpsVal(Rational(1), 1)));
  EXPECT_EQ(rc.r(r1), sig("5"));
  EXPECT_EQ(t_poly_sign(ctx, b, r0, r1), 1);
  EXPECT_EQ(t_poly_sign(ctx, b, r1, r0), -1);
  // The dominant product decides; the factored and lifted evaluations agree.
  EXPECT_EQ(t_poly_sign(ctx, b, r0, r1, TSignPath::Factored), 1);
  EXPECT_EQ(t_poly_sign(ctx, b, r0, r1, TSignPath::Lift), 1);
}

TEST(LeavingVariable, OneVariablePhaseOne) {
  const RuleContext ctx(SignedMatrix(0, 1), vec("0"));
  EXPECT_EQ(leaving_variable(ctx, Basis::initial(1)), BasisElem::col(0));
}

TEST(LeavingVariable, DecreasingCoObjectiveGivesNone) {
  const RuleContext ctx(mat("0"), vec("~0"));
  EXPECT_EQ(leaving_variable(ctx, Basis{{0}, {}}), std::nullopt);
}

TEST(LeavingVariable, AgreesWithLiftOracle) {
  const auto report = selfcheck::check_leaving_rule(300, 51);
  EXPECT_TRUE(report.passed()) << selfcheck::format(report);
  EXPECT_EQ(report.trials, 300u);
}

TEST(LeavingVariable, AgreesWithLiftOracleAtRandomBases) {
  int compared = 0, none = 0;
  for (const auto& s : random_samples(52, 300)) {
    std::optional<BasisElem> trop;
    try {
      trop = leaving_variable(s.ctx, s.basis);
    } catch (const NotGenericError&) {
      continue;
    }
    EXPECT_EQ(trop, oracles::oracle_leaving_variable(s.ctx, s.basis)) << to_string(s.basis);
    ++compared;
    none += trop ? 0 : 1;
  }
  EXPECT_GT(compared, 250);
  EXPECT_GT(none, 0);
}

TEST(TPolySign, FastPathFactoredAndLiftAgree) {
  int fast = 0, ties = 0;
  for (const auto& s : random_samples(53, 200)) {
    std::optional<ReducedCosts> rc;
    try {
      rc.emplace(s.ctx, s.basis);
    } catch (const NotGenericError&) {
      continue;
    }
    const auto elems = rc->elements();
    for (const auto& k : elems) {
      for (const auto& l : elems) {
        if (k == l) continue;
        int lifted = 0, factored = 0;
        try {
          factored = rc->t_sign(k, l, TSignPath::Factored);
        } catch (const NotGenericError&) {
          continue;
        }
        lifted = rc->t_sign(k, l, TSignPath::Lift);
        EXPECT_EQ(factored, lifted);
        const bool dominant = tmul(rc->q(k), rc->r(l)).modulus() != tmul(rc->q(l), rc->r(k)).modulus();
        if (dominant) {
          ++fast;
          EXPECT_EQ(rc->t_sign(k, l, TSignPath::Auto), lifted);
        } else {
          ++ties;
        }
      }
    }
  }
  EXPECT_GT(fast, 500);
}

TEST(TPolySign, Antisymmetric) {
  for (const auto& s : random_samples(54, 100)) {
    try {
      const ReducedCosts rc(s.ctx, s.basis);
      for (const auto& k : rc.elements())
        for (const auto& l : rc.elements())
          if (!(k == l)) EXPECT_EQ(rc.t_sign(k, l), -rc.t_sign(l, k));
    } catch (const NotGenericError&) {
    }
  }
}

TEST(Precedes, StrictTotalOrderOnLambda) {
  int sets = 0;
  for (const auto& s : random_samples(55, 400)) {
    try {
      const ReducedCosts rc(s.ctx, s.basis);
      const auto lambda = rc.lambda();
      if (lambda.size() < 2 || lambda.size() > 5) continue;
      ++sets;
      for (const auto& a : lambda) {
        EXPECT_FALSE(rc.precedes(a, a));
        for (const auto& b : lambda) {
          if (a == b) continue;
          EXPECT_NE(rc.precedes(a, b), rc.precedes(b, a));
          for (const auto& c : lambda)
            if (rc.precedes(a, b) && rc.precedes(b, c)) EXPECT_TRUE(rc.precedes(a, c));
        }
      }
    } catch (const NotGenericError&) {
    }
  }
  EXPECT_GT(sets, 20);
}

TEST(SignConstants, DependOnlyOnTheBasisShape) {
  const auto samples = random_samples(56, 100);
  for (const auto& s : samples) {
    // Same (I, J) on a second context of the same shape.
    std::mt19937_64 rng(57);
    const SignedMatrix other = selfcheck::random_signed_matrix(rng, s.ctx.prefix_rows(), s.ctx.cols(), -100, 100);
    const SignedMatrix v = selfcheck::random_signed_matrix(rng, 1, s.ctx.cols(), -100, 100);
    const RuleContext ctx2(other, v.row(0));
    try {
      EXPECT_EQ(sign_constants(s.ctx, s.basis), sign_constants(ctx2, s.basis));
    } catch (const NotGenericError&) {
    }
  }
}

TEST(ReducedCosts, BasisMinorIsRowsTimesFreeColumns) {
  const RuleContext ctx = two_row_context();
  EXPECT_EQ(ReducedCosts(ctx, Basis{{0, 1}, {}}).p(), tdet(mat("0 1; 2 0")));
  EXPECT_EQ(ReducedCosts(ctx, Basis{{1}, {1}}).p(), sig("2"));
  EXPECT_EQ(ReducedCosts(ctx, Basis::initial(2)).p(), sig("0"));
  EXPECT_THROW(ReducedCosts(ctx, Basis{{2}, {0}}), Error);
}

}  // namespace
}  // namespace tropsolve
