#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "reference.hpp"
#include "simplexlab/error.hpp"
#include "simplexlab/generators.hpp"
#include "simplexlab/pivot_rules.hpp"
#include "simplexlab/simplex.hpp"

using namespace simplexlab;
using fixtures::basis;
using fixtures::e1;
using fixtures::make_lp;
using fixtures::vec;

namespace {

// Slack-basis dictionary with c_bar = c_N and A_bar = A_N.
Dictionary slack_dictionary(const std::vector<Vector>& abar_rows, const Vector& cbar, const Vector& b) {
  const std::size_t m = abar_rows.size();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m; ++i) {
    Vector r = abar_rows[i];
    for (std::size_t j = 0; j < m; ++j) r.push_back(Rational(i == j ? 1 : 0));
    rows.push_back(std::move(r));
  }
  Vector c = cbar;
  c.resize(cbar.size() + m, Rational(0));
  const StandardFormLP lp = validate(make_lp("d", rows, b, c));
  std::vector<std::size_t> slack;
  for (std::size_t j = 0; j < m; ++j) slack.push_back(cbar.size() + j);
  return dictionary(lp, Basis(lp, slack));
}

}  // namespace

TEST(NormOrder, ParseAndPrint) {
  EXPECT_EQ(NormOrder::parse("3"), NormOrder::finite(3));
  EXPECT_TRUE(NormOrder::parse("inf").is_infinite());
  EXPECT_TRUE(NormOrder::parse("Infinity").is_infinite());
  EXPECT_EQ(NormOrder::infinity().to_string(), "inf");
  EXPECT_EQ(NormOrder::infinity().power(), 1u);
  EXPECT_THROW(NormOrder::finite(0), Error);
  EXPECT_THROW(NormOrder::parse("1.5"), Error);
}

TEST(PivotRule, Designators) {
  EXPECT_EQ(PivotRule::parse("steepest"), PivotRule::parse("pnorm:2"));
  EXPECT_EQ(PivotRule::parse("pnorm:inf").order, NormOrder::infinity());
  EXPECT_EQ(PivotRule::parse("best").kind, PivotRule::Kind::BestImprovement);
  for (const char* d : {"dantzig", "best", "pnorm:1", "pnorm:7", "pnorm:inf"}) {
    EXPECT_EQ(PivotRule::parse(d).to_string(), d);
  }
  for (const char* bad : {"", "pnorm", "pnorm:", "pnorm:0", "pnorm:-1", "bland", "pnorm:2x"}) {
    EXPECT_THROW(PivotRule::parse(bad), Error) << bad;
  }
}

TEST(ColumnNorm, Examples) {
  EXPECT_EQ(powered_norm(vec({3, 4}), NormOrder::finite(2)), Rational(26));
  EXPECT_EQ(powered_norm(vec({0, 0}), NormOrder::finite(2)), Rational(1));
  EXPECT_EQ(powered_norm(vec({0, 0}), NormOrder::finite(5)), Rational(1));
  EXPECT_EQ(powered_norm(vec({0, 0}), NormOrder::infinity()), Rational(1));
  EXPECT_EQ(powered_norm(vec({3, 4}), NormOrder::infinity()), Rational(4));
  EXPECT_EQ(powered_norm(vec({-3, 4}), NormOrder::finite(1)), Rational(8));
  EXPECT_EQ(powered_norm(vec({Rational(1, 2), -2}), NormOrder::infinity()), Rational(2));

  const ColumnNorm two{NormOrder::finite(2), Rational(25)};
  ASSERT_TRUE(two.exact());
  EXPECT_EQ(*two.exact(), Rational(5));
  EXPECT_FALSE((ColumnNorm{NormOrder::finite(2), Rational(26)}.exact()));
  EXPECT_NEAR((ColumnNorm{NormOrder::finite(2), Rational(26)}.value()), 5.0990195135927845, 1e-12);
}

TEST(SelectEntering, Examples) {
  const Dictionary d = slack_dictionary({vec({3, 0}), vec({4, 0})}, vec({-1, Rational(-9, 10)}), vec({1, 1}));
  const auto dz = select_entering(d, PivotRule::dantzig());
  EXPECT_EQ(dz.status, EnteringChoice::Status::Column);
  EXPECT_EQ(dz.column, 0u);
  const auto pn = select_entering(d, PivotRule::pnorm(NormOrder::finite(2)));
  EXPECT_EQ(pn.status, EnteringChoice::Status::Column);
  EXPECT_EQ(pn.column, 1u);

  const Dictionary opt = slack_dictionary({vec({1, 2}), vec({1, 1})}, vec({1, 2}), vec({1, 1}));
  EXPECT_EQ(select_entering(opt, PivotRule::dantzig()).status, EnteringChoice::Status::Optimal);
  EXPECT_EQ(select_entering(opt, PivotRule::pnorm(NormOrder::infinity())).status, EnteringChoice::Status::Optimal);

  const Dictionary tie = slack_dictionary({vec({2, 2}), vec({1, 1})}, vec({-1, -1}), vec({1, 1}));
  EXPECT_EQ(select_entering(tie, PivotRule::pnorm(NormOrder::finite(1))).column, 0u);
  EXPECT_EQ(select_entering(tie, PivotRule::dantzig()).column, 0u);
}

TEST(SelectEntering, BestImprovementUsesStepLength) {
  const Dictionary d = slack_dictionary({vec({1, 1}), vec({1, 4})}, vec({-2, -1}), vec({1, 8}));
  // Column 0 can move 1 (gain 2); column 1 can move 1 (gain 1).
  StepLength step = [&](std::size_t k) -> std::optional<Rational> {
    const auto r = ratio_test(d, k);
    if (!r) return std::nullopt;
    return r->step;
  };
  EXPECT_EQ(select_entering(d, PivotRule::best_improvement(), step).column, 0u);
  EXPECT_THROW(select_entering(d, PivotRule::best_improvement()), Error);
}

TEST(SelectEntering, PNormComparisons) {
  const NormOrder two = NormOrder::finite(2);
  // -1/sqrt(26) vs -9/10: the second is more negative.
  EXPECT_TRUE(pnorm_prefers(Rational(-9, 10), Rational(1), Rational(-1), Rational(26), two));
  EXPECT_FALSE(pnorm_prefers(Rational(-1), Rational(26), Rational(-9, 10), Rational(1), two));
  EXPECT_FALSE(pnorm_prefers(Rational(-1), Rational(4), Rational(-1), Rational(4), two));
  EXPECT_TRUE(pnorm_prefers(Rational(-3), Rational(3), Rational(-1), Rational(2), NormOrder::infinity()));
}

TEST(SelectEntering, SteepestEdgeMatchesReferenceOnEveryBasis) {
  // Every nonsingular basis of several random instances, feasible or not.
  std::size_t compared = 0;
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto inst = random_lp(3, 6, seed);
    const auto ref = reference::from_lp(inst.lp);
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = a + 1; b < 6; ++b) {
        for (std::size_t c = b + 1; c < 6; ++c) {
          const auto d = try_dictionary(inst.lp, {a, b, c});
          if (!d) continue;
          const auto choice = select_entering(*d, PivotRule::steepest_edge());
          const auto expected = reference::steepest_edge(ref, {a, b, c});
          if (!expected) {
            EXPECT_EQ(choice.status, EnteringChoice::Status::Optimal);
          } else {
            ASSERT_EQ(choice.status, EnteringChoice::Status::Column);
            EXPECT_EQ(d->nonbasis()[choice.column], *expected);
          }
          ++compared;
        }
      }
    }
  }
  EXPECT_GT(compared, 200u);
}

TEST(RatioTest, Examples) {
  const Dictionary d1 = slack_dictionary({vec({1, -1}), vec({1, 0})}, vec({-1, -1}), vec({1, 3}));
  auto r = ratio_test(d1, 0);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->row, 0u);
  EXPECT_EQ(r->step, Rational(1));
  EXPECT_FALSE(ratio_test(d1, 1));

  const Dictionary d2 = slack_dictionary({vec({2, 1}), vec({1, 1})}, vec({-1, -1}), vec({2, 2}));
  r = ratio_test(d2, 0);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->row, 0u);
  EXPECT_EQ(r->step, Rational(1));
  EXPECT_THROW(ratio_test(d2, 2), Error);
}

TEST(RatioTest, TieGoesToSmallestLeavingIndex) {
  // Basis listed as {x3, x2}: both rows give step 1, x2 must leave.
  const auto lp2 = validate(make_lp("t", {vec({1, 1, 0}), vec({1, 0, 1})}, vec({1, 1}), vec({-1, 0, 0})));
  const Dictionary d = dictionary(lp2, basis(lp2, {3, 2}));
  const auto r = ratio_test(d, 0);
  ASSERT_TRUE(r);
  EXPECT_EQ(d.basis[r->row], 1u);
}

TEST(Solve, E1WithSteepestEdge) {
  const StandardFormLP lp = e1();
  const SolveTrace t = solve(lp, basis(lp, {3, 4}), PivotRule::pnorm(NormOrder::finite(2)));
  ASSERT_EQ(t.outcome, Outcome::Optimal);
  ASSERT_EQ(t.iterations(), 2u);
  EXPECT_EQ(t.records[0].entering, 0u);
  EXPECT_EQ(t.records[0].leaving, 2u);
  EXPECT_EQ(t.records[1].entering, 1u);
  EXPECT_EQ(t.records[1].leaving, 3u);
  EXPECT_TRUE(t.final_basis.same_set(basis(lp, {1, 2})));
  EXPECT_EQ(t.final_objective, Rational(-2));
  EXPECT_EQ(t.records[0].objective_before, Rational(0));
  EXPECT_EQ(t.records[0].objective_after, Rational(-1));
}

TEST(Solve, AllRulesAgreeOnE1) {
  const StandardFormLP lp = e1();
  for (const char* r : {"dantzig", "best", "pnorm:1", "pnorm:3", "pnorm:inf"}) {
    const SolveTrace t = solve(lp, basis(lp, {3, 4}), PivotRule::parse(r));
    EXPECT_EQ(t.outcome, Outcome::Optimal) << r;
    EXPECT_EQ(t.final_objective, Rational(-2)) << r;
  }
}

TEST(Solve, OptimalStartTakesNoIterations) {
  const StandardFormLP lp = e1();
  const SolveTrace t = solve(lp, basis(lp, {1, 2}), PivotRule::steepest_edge());
  EXPECT_EQ(t.outcome, Outcome::Optimal);
  EXPECT_EQ(t.iterations(), 0u);
}

TEST(Solve, Unbounded) {
  // x2 = 1 + x1 along the ray; min -x1 has no lower bound.
  const StandardFormLP lp = validate(make_lp("u", {vec({-1, 1})}, vec({1}), vec({-1, 0})));
  const SolveTrace t = solve(lp, basis(lp, {2}), PivotRule::dantzig());
  EXPECT_EQ(t.outcome, Outcome::Unbounded);
  ASSERT_TRUE(t.unbounded_variable);
  EXPECT_EQ(*t.unbounded_variable, 0u);
}

TEST(Solve, DegeneratePivotAborts) {
  // b has a zero entry: x4 = 0 at the start, so entering x1 takes a zero step.
  const StandardFormLP lp = validate(make_lp("dg", {vec({1, 1, 1, 0}), vec({1, -1, 0, 1})}, vec({2, 0}), vec({-1, 0, 0, 0})));
  const SolveTrace t = solve(lp, basis(lp, {3, 4}), PivotRule::dantzig());
  EXPECT_EQ(t.outcome, Outcome::DegeneratePivot);
  EXPECT_EQ(t.iterations(), 0u);
}

TEST(Solve, IterationLimit) {
  const auto km = klee_minty(4);
  const SolveTrace t = solve(km.lp, km.initial, PivotRule::dantzig(), 3);
  EXPECT_EQ(t.outcome, Outcome::IterationLimit);
  EXPECT_EQ(t.iterations(), 3u);
  EXPECT_EQ(default_max_iters(8, 4), 140u);
}

TEST(Solve, InfeasibleStartRejected) {
  const StandardFormLP lp = validate(make_lp("neg", {vec({1, -1})}, vec({1}), vec({0, 0})));
  try {
    solve(lp, basis(lp, {2}), PivotRule::dantzig());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InfeasibleInitialBasis);
  }
}

TEST(Solve, KleeMintyDantzigVisitsEveryVertex) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto km = klee_minty(m);
    const SolveTrace t = solve(km.lp, km.initial, PivotRule::dantzig());
    EXPECT_EQ(t.outcome, Outcome::Optimal);
    EXPECT_EQ(t.iterations(), (std::size_t{1} << m) - 1) << "m=" << m;
  }
}

TEST(Solve, RecordsAreConsistent) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = random_lp(3, 7, seed);
    for (const char* r : {"dantzig", "best", "pnorm:1", "pnorm:2", "pnorm:inf"}) {
      const SolveTrace t = solve(inst.lp, inst.initial, PivotRule::parse(r));
      ASSERT_EQ(t.outcome, Outcome::Optimal);
      Rational z = t.initial_solution.objective;
      for (const auto& rec : t.records) {
        EXPECT_EQ(rec.objective_before, z);
        EXPECT_EQ(rec.objective_after, rec.objective_before - rec.delta_s * rec.step);
        EXPECT_LT(rec.objective_after, rec.objective_before);
        EXPECT_GE(rec.delta_d, rec.delta_s);
        z = rec.objective_after;
      }
      EXPECT_EQ(z, t.final_objective);
    }
  }
}

TEST(PhaseOne, EmbeddedIdentity) {
  const StandardFormLP lp = e1();
  // Both {x1, x2} and {x3, x4} are identity submatrices; either is acceptable.
  const Basis b = phase_one(lp);
  const Dictionary d = dictionary(lp, b);
  EXPECT_EQ(lp.A.select_columns(b.indices()), Matrix::from_rows({vec({1, 0}), vec({0, 1})}));
  EXPECT_EQ(d.b_bar, lp.b);
}

TEST(PhaseOne, Infeasible) {
  const StandardFormLP lp = validate(make_lp("inf", {vec({1, 1})}, vec({-1}), vec({0, 0})));
  try {
    phase_one(lp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Infeasible);
  }
}

TEST(PhaseOne, FindsFeasibleBasisWithoutIdentity) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto inst = random_lp(3, 6, seed);
    const Basis b = phase_one(inst.lp);
    const BasicSolution s = basic_solution(inst.lp, b);
    EXPECT_TRUE(s.feasible);
  }
  // Negative right-hand side forces the auxiliary problem.
  const StandardFormLP lp = validate(make_lp("neg", {vec({-1, -1, 1, 0}), vec({1, -1, 0, 1})}, vec({-2, 1}), vec({1, 1, 0, 0})));
  const Basis b = phase_one(lp);
  EXPECT_TRUE(basic_solution(lp, b).feasible);
  EXPECT_GE(basic_solution(lp, b).objective, Rational(3, 2));
}
