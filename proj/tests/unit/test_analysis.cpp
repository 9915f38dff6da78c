#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "reference.hpp"
#include "simplexlab/analysis.hpp"
#include "simplexlab/certified.hpp"
#include "simplexlab/error.hpp"
#include "simplexlab/generators.hpp"

using namespace simplexlab;
using fixtures::basis;
using fixtures::code_of;
using fixtures::e1;
using fixtures::make_lp;
using fixtures::vec;

namespace {

double lower(const Interval& i) { return mpfr_get_d(i.lo(), MPFR_RNDD); }
double upper(const Interval& i) { return mpfr_get_d(i.hi(), MPFR_RNDU); }

}  // namespace

TEST(Certified, EnclosuresContainTheValue) {
  for (long k = 1; k <= 40; ++k) {
    const Interval l = Interval::exact(Rational(k, 7), 80).log();
    EXPECT_LE(lower(l), std::log(k / 7.0) + 1e-15);
    EXPECT_GE(upper(l), std::log(k / 7.0) - 1e-15);
    const Interval r = Interval::exact(Rational(k), 80).root(3);
    EXPECT_LE(lower(r), std::cbrt(double(k)) + 1e-15);
    EXPECT_GE(upper(r), std::cbrt(double(k)) - 1e-15);
  }
  const Interval zero = Interval::exact(Rational(1), 64).log();
  EXPECT_EQ(mpfr_sgn(zero.lo()), 0);
  EXPECT_EQ(mpfr_sgn(zero.hi()), 0);
  EXPECT_EQ(Interval::exact(Rational(1, 3), 128).to_decimal(12), "0.333333333333");
}

TEST(Certified, Ceilings) {
  auto two_ln2 = [](mpfr_prec_t p) { return Interval::exact(Rational(2), p) * Interval::exact(Rational(2), p).log(); };
  EXPECT_EQ(certified_ceil(two_ln2), 2);
  auto exact_int = [](mpfr_prec_t p) { return Interval::exact(Rational(5), p); };
  EXPECT_EQ(certified_ceil(exact_int), 5);
  // ln(e^k) style values are never exact; 3 ln 2 = ln 8 = 2.079...
  auto ln8 = [](mpfr_prec_t p) { return Interval::exact(Rational(8), p).log(); };
  EXPECT_EQ(certified_ceil(ln8), 3);
  // A positive quantity whose enclosure never separates from an integer.
  auto stuck = [](mpfr_prec_t p) {
    return Interval::exact(Rational(2), p).log() - Interval::exact(Rational(2), p).log() + Interval::exact(Rational(1), p);
  };
  EXPECT_EQ(code_of([&] { certified_ceil(stuck, 256); }), Errc::UncertifiedCeiling);
}

TEST(Enumerate, E1Catalog) {
  const BfsCatalog c = enumerate_bfs(e1());
  EXPECT_EQ(c.entries.size(), 4u);
  EXPECT_EQ(c.subsets_examined, 6u);
  EXPECT_EQ(*c.gamma, Rational(1));
  EXPECT_EQ(*c.delta, Rational(1));
  EXPECT_EQ(c.z_star, Rational(-2));
  EXPECT_EQ(*c.z_second, Rational(-1));
  EXPECT_TRUE(c.nondegenerate);
  EXPECT_EQ(*c.gamma_D_prime, Rational(1));
  EXPECT_EQ(*c.delta_D_prime, Rational(1));
  EXPECT_TRUE(c.optimal_basis.same_set(basis(e1(), {1, 2})));
  EXPECT_NE(c.find(basis(e1(), {4, 1})), nullptr);
}

TEST(Enumerate, ZeroRightHandSideIsDegenerate) {
  const StandardFormLP lp = validate(make_lp("zero", {vec({1, 0, 1, 0}), vec({0, 1, 0, 1})}, vec({0, 0}), vec({-1, -1, 0, 0})));
  const BfsCatalog c = enumerate_bfs(lp);
  EXPECT_FALSE(c.nondegenerate);
  EXPECT_FALSE(c.gamma);
  EXPECT_FALSE(c.delta);
  EXPECT_EQ(code_of([&] { compute_q(lp, c, NormOrder::finite(2)); }), Errc::DegenerateInstance);
}

TEST(Enumerate, KleeMintyThreeHasEightVertices) {
  const auto km = klee_minty(3);
  const BfsCatalog c = enumerate_bfs(km.lp);
  EXPECT_EQ(c.entries.size(), 8u);
  EXPECT_TRUE(c.nondegenerate);
  EXPECT_EQ(*c.delta, Rational(5));
  EXPECT_EQ(*c.gamma, Rational(125));
  EXPECT_EQ(c.z_star, Rational(-125));
}

TEST(Enumerate, BudgetAndInfeasibility) {
  const auto km = klee_minty(4);
  EXPECT_EQ(code_of([&] { enumerate_bfs(km.lp, 10); }), Errc::BudgetExceeded);
  const StandardFormLP lp = validate(make_lp("inf", {vec({1, 1})}, vec({-1}), vec({0, 0})));
  EXPECT_EQ(code_of([&] { enumerate_bfs(lp); }), Errc::NoFeasibleBasis);
}

TEST(Enumerate, MatchesReferenceEnumeration) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = random_lp(2 + seed % 3, 6 + seed % 2, seed);
    const BfsCatalog c = enumerate_bfs(inst.lp);
    const auto ref = reference::vertices(reference::from_lp(inst.lp));
    ASSERT_EQ(c.entries.size(), ref.size());
    mpq_class zmin = ref.front().objective;
    for (const auto& v : ref) {
      if (v.objective < zmin) zmin = v.objective;
      const BfsEntry* e = c.find(Basis(inst.lp, v.basis));
      ASSERT_NE(e, nullptr);
      for (std::size_t j = 0; j < v.x.size(); ++j) EXPECT_EQ(e->solution.x[j].raw(), v.x[j]);
    }
    EXPECT_EQ(c.z_star.raw(), zmin);
  }
}

TEST(ComputeQ, E1IsOne) {
  const StandardFormLP lp = e1();
  const BfsCatalog c = enumerate_bfs(lp);
  for (const auto order : {NormOrder::finite(1), NormOrder::finite(2), NormOrder::infinity()}) {
    const QReport q = compute_q(lp, c, order);
    EXPECT_EQ(q.q_powered, Rational(1));
    EXPECT_TRUE(q.lower_bound_holds);
    EXPECT_EQ(q.norm_bounds.violations, 0u);
    EXPECT_GT(q.norm_bounds.checked, 0u);
    EXPECT_EQ(q.q_decimal(), "1");
  }
}

TEST(ComputeQ, PerNonbasisRatio) {
  // Slack dictionary with c_bar = (-1, -9/10) and A_bar columns (3,4), (1/10, 1/10).
  // Column 2's norm^2 is 1 + 2/100; p = 2 picks it, Dantzig picks column 1.
  const StandardFormLP lp = validate(make_lp(
      "q", {vec({3, Rational(1, 10), 1, 0}), vec({4, Rational(1, 10), 0, 1})}, vec({1, 2}), vec({-1, Rational(-9, 10), 0, 0})));
  const BfsCatalog c = enumerate_bfs(lp);
  ASSERT_TRUE(c.nondegenerate);
  const QReport q = compute_q(lp, c, NormOrder::finite(2));
  const QEntry* start = nullptr;
  for (const auto& e : q.per_nonbasis) {
    if (e.basis.same_set(basis(lp, {3, 4}))) start = &e;
  }
  ASSERT_NE(start, nullptr);
  EXPECT_EQ(start->s, 1u);
  EXPECT_EQ(start->d, 0u);
  EXPECT_EQ(start->q_powered, Rational(102, 100) / Rational(26));
  EXPECT_LE(q.q_powered, start->q_powered);
}

TEST(ComputeQ, AllBasesOptimal) {
  const StandardFormLP lp = validate(make_lp("flat", {vec({1, 1})}, vec({1}), vec({1, 1})));
  const BfsCatalog c = enumerate_bfs(lp);
  EXPECT_EQ(code_of([&] { compute_q(lp, c, NormOrder::finite(2)); }), Errc::NoImprovingNonbasis);
}

TEST(Bounds, E1Values) {
  const StandardFormLP lp = e1();
  const BfsCatalog c = enumerate_bfs(lp);
  const QReport q = compute_q(lp, c, NormOrder::finite(2));
  const BoundReport b = evaluate_bounds(c, &q, 2, 4, NormOrder::finite(2), Rational(0));
  EXPECT_EQ(*b.thm3, 2);
  EXPECT_EQ(*b.thm4, 4);
  EXPECT_EQ(*b.thm5, 2);
  EXPECT_EQ(*b.thm6, 4);
  EXPECT_EQ(b.km1, 2);
  EXPECT_EQ(b.km2, 4);
  EXPECT_EQ(b.km3, 2);
  EXPECT_EQ(b.gap0, Rational(2));
  EXPECT_EQ(b.gap_second, Rational(1));
}

TEST(Bounds, LogOfOneGivesZero) {
  const StandardFormLP lp = e1();
  const BfsCatalog c = enumerate_bfs(lp);
  const QReport q = compute_q(lp, c, NormOrder::finite(2));
  const BoundReport b = evaluate_bounds(c, &q, 2, 4, NormOrder::finite(2), Rational(-1));
  EXPECT_EQ(*b.thm3, 0);
  EXPECT_EQ(*b.thm5, 0);
  EXPECT_EQ(b.km1, 0);
}

TEST(Bounds, Errors) {
  const StandardFormLP lp = e1();
  const BfsCatalog c = enumerate_bfs(lp);
  EXPECT_EQ(code_of([&] { evaluate_bounds(c, nullptr, 2, 4, NormOrder::finite(2), Rational(0)); }), Errc::UndefinedQ);
  EXPECT_EQ(code_of([&] { evaluate_bounds(c, nullptr, 2, 4, std::nullopt, Rational(-2)); }), Errc::InvalidArgument);
  const StandardFormLP one = validate(make_lp("one", {vec({1, 1})}, vec({1}), vec({1, 1})));
  EXPECT_EQ(code_of([&] { evaluate_bounds(enumerate_bfs(one), nullptr, 1, 2, std::nullopt, Rational(2)); }),
            Errc::MissingSecondBest);
}

TEST(Bounds, OrderingProperties) {
  // thm5 >= thm3 and thm6 >= thm4 whenever q respects its lower bound.
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto inst = random_lp(3, 6, seed);
    const BfsCatalog c = enumerate_bfs(inst.lp);
    const Rational x0 = basic_solution(inst.lp, inst.initial).objective;
    for (const auto order : {NormOrder::finite(1), NormOrder::finite(2), NormOrder::finite(3), NormOrder::infinity()}) {
      const QReport q = compute_q(inst.lp, c, order);
      ASSERT_TRUE(q.lower_bound_holds);
      const BoundReport b = evaluate_bounds(c, &q, 3, 6, order, x0);
      EXPECT_GE(*b.thm5, *b.thm3);
      EXPECT_GE(*b.thm6, *b.thm4);
      EXPECT_GE(*b.thm3, b.km1);
    }
  }
}

TEST(Verify, E1SteepestEdgeTrace) {
  const StandardFormLP lp = e1();
  const BfsCatalog c = enumerate_bfs(lp);
  const QReport q = compute_q(lp, c, NormOrder::finite(2));
  const SolveTrace t = solve(lp, basis(lp, {3, 4}), PivotRule::steepest_edge());
  const VerificationReport r = verify_trace(lp, t, c, &q, dual_solution(lp, c.optimal_basis));
  EXPECT_TRUE(r.all_pass());
  for (const char* name : {"exchange", "decrease", "selection", "L1", "L2", "L3_exists", "L3_tracked", "duality", "count"}) {
    ASSERT_NE(r.find(name), nullptr) << name;
    EXPECT_TRUE(r.find(name)->pass) << name;
  }
  EXPECT_EQ(r.find("L1")->evaluated, 2u);
  ASSERT_TRUE(r.bounds);
  EXPECT_EQ(*r.bounds->thm3, 2);
}

TEST(Verify, ZeroIterationTrace) {
  const StandardFormLP lp = e1();
  const BfsCatalog c = enumerate_bfs(lp);
  const QReport q = compute_q(lp, c, NormOrder::finite(2));
  const SolveTrace t = solve(lp, basis(lp, {1, 2}), PivotRule::steepest_edge());
  const VerificationReport r = verify_trace(lp, t, c, &q, dual_solution(lp, c.optimal_basis));
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.iterations, 0u);
}

TEST(Verify, DetectsTampering) {
  const StandardFormLP lp = e1();
  const BfsCatalog c = enumerate_bfs(lp);
  const QReport q = compute_q(lp, c, NormOrder::finite(2));
  SolveTrace t = solve(lp, basis(lp, {3, 4}), PivotRule::steepest_edge());
  t.records[1].objective_after = Rational(-3);
  t.final_objective = Rational(-3);
  EXPECT_THROW(verify_trace(lp, t, c, &q, dual_solution(lp, c.optimal_basis)), Error);

  SolveTrace swapped = solve(lp, basis(lp, {3, 4}), PivotRule::steepest_edge());
  swapped.records[0].entering = 1;
  const auto r = verify_trace(lp, swapped, c, &q, dual_solution(lp, c.optimal_basis));
  EXPECT_FALSE(r.all_pass());
}

TEST(Verify, Errors) {
  const StandardFormLP lp = e1();
  const BfsCatalog c = enumerate_bfs(lp);
  const auto dual = dual_solution(lp, c.optimal_basis);
  const SolveTrace cut = solve(lp, basis(lp, {3, 4}), PivotRule::dantzig(), 1);
  EXPECT_EQ(code_of([&] { verify_trace(lp, cut, c, nullptr, dual); }), Errc::TraceNotOptimal);
  const SolveTrace pn = solve(lp, basis(lp, {3, 4}), PivotRule::steepest_edge());
  EXPECT_EQ(code_of([&] { verify_trace(lp, pn, c, nullptr, dual); }), Errc::UndefinedQ);
  const auto km = klee_minty(2);
  const SolveTrace other = solve(km.lp, km.initial, PivotRule::dantzig());
  EXPECT_EQ(code_of([&] { verify_trace(km.lp, other, c, nullptr, dual); }), Errc::CatalogMismatch);
}
