#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexlab/certified.hpp"
#include "simplexlab/lp.hpp"
#include "simplexlab/pivot_rules.hpp"
#include "simplexlab/simplex.hpp"

namespace simplexlab {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

struct BfsEntry {
  Dictionary dict;
  BasicSolution solution;
};

// Every feasible basis of an LP together with the instance constants
// (gamma, delta, z*, second-best value, reduced-cost extrema).
struct BfsCatalog {
  std::vector<BfsEntry> entries;
  std::optional<Rational> gamma;          // max positive BFS entry
  std::optional<Rational> delta;          // min positive BFS entry
  Rational z_star;                        // min BFS objective
  std::optional<Rational> z_second;       // min BFS objective strictly above z_star
  std::optional<Rational> gamma_D_prime;  // max |c_bar_k| over negative reduced costs
  std::optional<Rational> delta_D_prime;  // min |c_bar_k| over negative reduced costs
  bool nondegenerate = false;
  Basis optimal_basis;
  std::uint64_t subsets_examined = 0;

  // Entry with the same basic variable set, or nullptr.
  const BfsEntry* find(const Basis& basis) const;
};

// Brute force over all m-subsets of columns. Throws BudgetExceeded when
// C(n, m) > budget and NoFeasibleBasis when nothing is feasible.
BfsCatalog enumerate_bfs(const StandardFormLP& lp, std::uint64_t budget = kDefaultEnumerationBudget);

struct QEntry {
  Basis basis;
  std::size_t s = 0;  // variable chosen by the p-norm rule
  std::size_t d = 0;  // variable chosen by Dantzig's rule
  Rational q_powered; // (||v_s|| / ||v_d||)^p, or the plain ratio for p = inf
};

struct NormBoundCheck {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::optional<std::pair<Basis, std::size_t>> first_violation;  // basis, entering variable
};

// q and its lower bound, both in "powered" form: raised to the p-th power for
// finite p, plain for p = inf, so every comparison stays rational.
struct QReport {
  NormOrder order = NormOrder::finite(2);
  Rational q_powered;
  std::vector<QEntry> per_nonbasis;
  Rational lower_powered;  // delta^p / (m gamma^p), or delta/gamma for p = inf
  bool lower_bound_holds = false;
  NormBoundCheck norm_bounds;

  Interval q(mpfr_prec_t prec) const;
  std::string q_decimal(int digits = 12) const;
};

// Requires a nondegenerate catalog. Throws NoImprovingNonbasis when every
// feasible basis is optimal.
QReport compute_q(const StandardFormLP& lp, const BfsCatalog& catalog, NormOrder order);

struct BoundReport {
  std::size_t m = 0;
  std::size_t n = 0;
  Rational gamma;
  Rational delta;
  std::optional<NormOrder> order;
  std::optional<Rational> q_powered;
  Rational gap0;        // c'x0 - z*
  Rational gap_second;  // c'x_bar - z*

  std::optional<mpz_class> thm3, thm4, thm5, thm6;  // p-norm bounds
  mpz_class km1, km2, km3;                          // Dantzig / best-improvement bounds
  std::optional<mpz_class> dmdp_thm7;
};

// thm3/thm4 need `qrep`; thm5/thm6 need `order`. Leave both empty to get the
// Dantzig-rule bounds only.
BoundReport evaluate_bounds(const BfsCatalog& catalog, const QReport* qrep, std::size_t m,
                            std::size_t n, std::optional<NormOrder> order,
                            const Rational& x0_objective);

struct TraceCheck {
  std::string name;
  bool pass = true;
  std::size_t evaluated = 0;
  std::optional<std::size_t> first_failure;  // iteration index
  std::string detail;
};

struct VerificationReport {
  std::vector<TraceCheck> checks;
  std::optional<BoundReport> bounds;
  std::size_t iterations = 0;

  bool all_pass() const;
  const TraceCheck* find(const std::string& name) const;
};

// Replays a solved trace against the catalog and checks, exactly, the
// per-iteration inequalities, the duality identities, the rule selection
// inequality, and the iteration count against the applicable bounds.
// `qrep` is required for p-norm traces and must use the trace's norm order.
VerificationReport verify_trace(const StandardFormLP& lp, const SolveTrace& trace,
                                const BfsCatalog& catalog, const QReport* qrep,
                                const DualSolution& dual_opt);

}  // namespace simplexlab
