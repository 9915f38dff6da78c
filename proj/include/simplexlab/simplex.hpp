#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "simplexlab/lp.hpp"
#include "simplexlab/pivot_rules.hpp"

namespace simplexlab {

struct RatioStep {
  std::size_t row = 0;  // dictionary row of the leaving variable
  Rational step;        // theta_s
};

// Minimum-ratio test for nonbasis column `column`. Ties go to the smallest
// leaving variable index. nullopt when no entry of the column is positive.
std::optional<RatioStep> ratio_test(const Dictionary& dict, std::size_t column);

struct IterationRecord {
  std::size_t t = 0;
  Basis basis_before;
  std::size_t entering = 0;           // variable index
  std::size_t leaving = 0;            // variable index
  std::size_t dantzig_entering = 0;   // variable Dantzig's rule would have picked
  Rational step;                      // theta_s
  Rational delta_s;                   // -c_bar_s
  Rational delta_d;                   // -min_k c_bar_k
  ColumnNorm norm_s;
  ColumnNorm norm_d;
  Rational objective_before;
  Rational objective_after;
};

enum class Outcome { Optimal, Unbounded, IterationLimit, DegeneratePivot };
const char* to_string(Outcome outcome);

struct SolveTrace {
  PivotRule rule;
  NormOrder norm_order = NormOrder::finite(2);  // order used for norm_s / norm_d
  BasicSolution initial_solution;
  std::vector<IterationRecord> records;
  Outcome outcome = Outcome::Optimal;
  Basis final_basis;                              // basis at termination
  Rational final_objective;
  std::optional<std::size_t> unbounded_variable;  // entering variable with an unbounded ray

  std::size_t iterations() const { return records.size(); }
};

// 2 * C(n, m), saturating.
std::uint64_t default_max_iters(std::size_t n, std::size_t m);

// Primal simplex from a feasible basis. Stops with DegeneratePivot the first
// time a zero-length step would be taken; no anti-cycling is attempted.
// Throws InfeasibleInitialBasis when `initial` is not primal feasible.
SolveTrace solve(const StandardFormLP& lp, const Basis& initial, const PivotRule& rule,
                 std::optional<std::uint64_t> max_iters = std::nullopt);

// Auxiliary-problem phase one. Returns a feasible basis of `lp` or throws
// Error(Infeasible).
Basis phase_one(const StandardFormLP& lp);

}  // namespace simplexlab
