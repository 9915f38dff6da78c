#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simplexlab {

enum class Errc {
  DimensionMismatch,
  RankDeficient,
  DegenerateShape,
  SingularBasis,
  IndexOutOfRange,
  InvalidP,
  InvalidArgument,
  InfeasibleInitialBasis,
  Infeasible,
  BudgetExceeded,
  NoFeasibleBasis,
  NoImprovingNonbasis,
  MissingSecondBest,
  UndefinedQ,
  DegenerateInstance,
  TraceNotOptimal,
  CatalogMismatch,
  InvalidDimension,
  ResampleLimitExceeded,
  InvalidTheta,
  ParseError,
  UncertifiedCeiling,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace simplexlab
