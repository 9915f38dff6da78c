#include "simplexlab/pivot_rules.hpp"

#include <charconv>
#include <cmath>

#include "simplexlab/error.hpp"

namespace simplexlab {

NormOrder NormOrder::finite(unsigned p) {
  if (p < 1) throw Error(Errc::InvalidP, "p must be >= 1");
  return NormOrder(p);
}

std::string NormOrder::to_string() const { return is_infinite() ? "inf" : std::to_string(p_); }

NormOrder NormOrder::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Infinity") return infinity();
  unsigned p = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, p);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(Errc::InvalidP, "expected a positive integer or 'inf', got '" + std::string(text) + "'");
  }
  return finite(p);
}

double ColumnNorm::value() const {
  if (order.is_infinite() || order.value() == 1) return powered.to_double();
  return std::pow(powered.to_double(), 1.0 / order.value());
}

std::optional<Rational> ColumnNorm::exact() const {
  if (order.is_infinite() || order.value() == 1) return powered;
  mpz_class num;
  mpz_class den;
  const bool num_exact = mpz_root(num.get_mpz_t(), powered.raw().get_num_mpz_t(), order.value()) != 0;
  const bool den_exact = mpz_root(den.get_mpz_t(), powered.raw().get_den_mpz_t(), order.value()) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  return Rational(mpq_class(num, den));
}

Rational powered_norm(const Vector& abar_column, NormOrder order) {
  if (order.is_infinite()) {
    Rational best(1);
    for (const auto& a : abar_column) {
      if (auto v = abs(a); v > best) best = std::move(v);
    }
    return best;
  }
  Rational sum(1);
  for (const auto& a : abar_column) sum += pow(abs(a), order.value());
  return sum;
}

ColumnNorm column_pnorm(const Dictionary& dict, std::size_t column, NormOrder order) {
  if (column >= dict.ell()) {
    throw Error(Errc::IndexOutOfRange, "nonbasis column " + std::to_string(column + 1) + " of " +
                                           std::to_string(dict.ell()));
  }
  return ColumnNorm{order, powered_norm(dict.A_bar.column(column), order)};
}

PivotRule PivotRule::parse(std::string_view designator) {
  if (designator == "dantzig") return dantzig();
  if (designator == "best") return best_improvement();
  if (designator == "steepest") return steepest_edge();
  constexpr std::string_view prefix = "pnorm:";
  if (designator.substr(0, prefix.size()) == prefix) {
    return pnorm(NormOrder::parse(designator.substr(prefix.size())));
  }
  throw Error(Errc::ParseError, "unknown pivot rule '" + std::string(designator) + "'");
}

std::string PivotRule::to_string() const {
  switch (kind) {
    case Kind::Dantzig: return "dantzig";
    case Kind::BestImprovement: return "best";
    case Kind::PNorm: return "pnorm:" + order.to_string();
  }
  return "?";
}

std::optional<std::size_t> dantzig_column(const Dictionary& dict) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < dict.ell(); ++k) {
    if (dict.c_bar[k].sign() >= 0) continue;
    if (!best || dict.c_bar[k] < dict.c_bar[*best]) best = k;
  }
  return best;
}

bool pnorm_prefers(const Rational& cbar_j, const Rational& powered_j, const Rational& cbar_k,
                   const Rational& powered_k, NormOrder order) {
  // c_j/|v_j| < c_k/|v_k| with both negative  <=>  |c_j|^p |v_k|^p > |c_k|^p |v_j|^p.
  const unsigned e = order.power();
  return pow(abs(cbar_j), e) * powered_k > pow(abs(cbar_k), e) * powered_j;
}

namespace {

EnteringChoice select_pnorm(const Dictionary& dict, NormOrder order) {
  std::optional<std::size_t> best;
  Rational best_powered;
  for (std::size_t k = 0; k < dict.ell(); ++k) {
    if (dict.c_bar[k].sign() >= 0) continue;
    Rational powered = powered_norm(dict.A_bar.column(k), order);
    if (!best || pnorm_prefers(dict.c_bar[k], powered, dict.c_bar[*best], best_powered, order)) {
      best = k;
      best_powered = std::move(powered);
    }
  }
  return best ? EnteringChoice::at(*best) : EnteringChoice::optimal();
}

EnteringChoice select_best_improvement(const Dictionary& dict, const StepLength& step_length) {
  if (!step_length) throw Error(Errc::InvalidArgument, "best-improvement rule needs a ratio test");
  std::optional<std::size_t> best;
  Rational best_gain;
  for (std::size_t k = 0; k < dict.ell(); ++k) {
    if (dict.c_bar[k].sign() >= 0) continue;
    const auto step = step_length(k);
    if (!step) return EnteringChoice::unbounded(k);
    Rational gain = -dict.c_bar[k] * *step;
    if (!best || gain > best_gain) {
      best = k;
      best_gain = std::move(gain);
    }
  }
  return best ? EnteringChoice::at(*best) : EnteringChoice::optimal();
}

}  // namespace

EnteringChoice select_entering(const Dictionary& dict, const PivotRule& rule,
                               const StepLength& step_length) {
  switch (rule.kind) {
    case PivotRule::Kind::Dantzig: {
      const auto d = dantzig_column(dict);
      return d ? EnteringChoice::at(*d) : EnteringChoice::optimal();
    }
    case PivotRule::Kind::PNorm: return select_pnorm(dict, rule.order);
    case PivotRule::Kind::BestImprovement: return select_best_improvement(dict, step_length);
  }
  return EnteringChoice::optimal();
}

}  // namespace simplexlab
