#include "simplexlab/error.hpp"

namespace simplexlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DegenerateShape: return "DegenerateShape";
    case Errc::SingularBasis: return "SingularBasis";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidP: return "InvalidP";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InfeasibleInitialBasis: return "InfeasibleInitialBasis";
    case Errc::Infeasible: return "Infeasible";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NoFeasibleBasis: return "NoFeasibleBasis";
    case Errc::NoImprovingNonbasis: return "NoImprovingNonbasis";
    case Errc::MissingSecondBest: return "MissingSecondBest";
    case Errc::UndefinedQ: return "UndefinedQ";
    case Errc::DegenerateInstance: return "DegenerateInstance";
    case Errc::TraceNotOptimal: return "TraceNotOptimal";
    case Errc::CatalogMismatch: return "CatalogMismatch";
    case Errc::InvalidDimension: return "InvalidDimension";
    case Errc::ResampleLimitExceeded: return "ResampleLimitExceeded";
    case Errc::InvalidTheta: return "InvalidTheta";
    case Errc::ParseError: return "ParseError";
    case Errc::UncertifiedCeiling: return "UncertifiedCeiling";
  }
  return "Unknown";
}

}  // namespace simplexlab
