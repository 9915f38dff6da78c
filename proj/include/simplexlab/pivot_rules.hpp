#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "simplexlab/lp.hpp"
#include "simplexlab/rational.hpp"

namespace simplexlab {

// Norm order p: a positive integer or infinity. Only integer p is supported
// so that every rule comparison reduces to rational arithmetic.
class NormOrder {
 public:
  static NormOrder finite(unsigned p);
  static NormOrder infinity() { return NormOrder(0); }

  bool is_infinite() const { return p_ == 0; }
  unsigned value() const { return p_; }  // 0 for infinity
  // Exponent applied when comparing in "powered" form (p, or 1 for infinity).
  unsigned power() const { return is_infinite() ? 1 : p_; }

  std::string to_string() const;  // "2", "inf"
  static NormOrder parse(std::string_view text);

  friend bool operator==(NormOrder, NormOrder) = default;

 private:
  explicit NormOrder(unsigned p) : p_(p) {}
  unsigned p_;
};

// Norm of a column of V_N = [-A_bar; I]. `powered` is ||v||_p^p for finite p
// and ||v||_inf itself for p = infinity; it is always exact.
struct ColumnNorm {
  NormOrder order = NormOrder::finite(2);
  Rational powered;

  double value() const;
  // The norm itself when it is rational (p = 1, p = inf, or a perfect power).
  std::optional<Rational> exact() const;
};

ColumnNorm column_pnorm(const Dictionary& dict, std::size_t column, NormOrder order);

// ||v||_p^p (or ||v||_inf) straight from a column vector of A_bar.
Rational powered_norm(const Vector& abar_column, NormOrder order);

struct PivotRule {
  enum class Kind { Dantzig, BestImprovement, PNorm };

  Kind kind = Kind::Dantzig;
  NormOrder order = NormOrder::finite(2);  // meaningful for PNorm only

  static PivotRule dantzig() { return {Kind::Dantzig, NormOrder::finite(2)}; }
  static PivotRule best_improvement() { return {Kind::BestImprovement, NormOrder::finite(2)}; }
  static PivotRule pnorm(NormOrder order) { return {Kind::PNorm, order}; }
  static PivotRule steepest_edge() { return pnorm(NormOrder::finite(2)); }

  // "dantzig" | "best" | "pnorm:<k>" | "pnorm:inf" | "steepest"
  static PivotRule parse(std::string_view designator);
  std::string to_string() const;

  friend bool operator==(const PivotRule&, const PivotRule&) = default;
};

// Result of entering-variable selection. `column` indexes the dictionary's
// nonbasis (0-based position, not variable index).
struct EnteringChoice {
  enum class Status { Optimal, Column, UnboundedRay };
  Status status = Status::Optimal;
  std::size_t column = 0;

  static EnteringChoice optimal() { return {Status::Optimal, 0}; }
  static EnteringChoice at(std::size_t k) { return {Status::Column, k}; }
  static EnteringChoice unbounded(std::size_t k) { return {Status::UnboundedRay, k}; }
};

// Step length of the ratio test for a nonbasis column; nullopt if the ray is unbounded.
using StepLength = std::function<std::optional<Rational>(std::size_t column)>;

// Column with the most negative reduced cost, or nullopt at an optimal dictionary.
std::optional<std::size_t> dantzig_column(const Dictionary& dict);

// True when column j strictly beats column k under the p-norm ratio
// c_bar / ||v||_p (more negative wins). Both reduced costs must be negative.
bool pnorm_prefers(const Rational& cbar_j, const Rational& powered_j, const Rational& cbar_k,
                   const Rational& powered_k, NormOrder order);

// BestImprovement needs `step_length`; the other rules ignore it.
EnteringChoice select_entering(const Dictionary& dict, const PivotRule& rule,
                               const StepLength& step_length = {});

}  // namespace simplexlab
