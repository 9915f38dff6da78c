#include "simplexlab/simplex.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "simplexlab/error.hpp"

namespace simplexlab {

std::optional<RatioStep> ratio_test(const Dictionary& dict, std::size_t column) {
  if (column >= dict.ell()) {
    throw Error(Errc::IndexOutOfRange, "nonbasis column " + std::to_string(column + 1));
  }
  std::optional<RatioStep> best;
  for (std::size_t i = 0; i < dict.b_bar.size(); ++i) {
    const Rational& a = dict.A_bar(i, column);
    if (a.sign() <= 0) continue;
    Rational ratio = dict.b_bar[i] / a;
    if (!best || ratio < best->step ||
        (ratio == best->step && dict.basis[i] < dict.basis[best->row])) {
      best = RatioStep{i, std::move(ratio)};
    }
  }
  return best;
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Optimal: return "Optimal";
    case Outcome::Unbounded: return "Unbounded";
    case Outcome::IterationLimit: return "IterationLimit";
    case Outcome::DegeneratePivot: return "DegeneratePivot";
  }
  return "?";
}

std::uint64_t default_max_iters(std::size_t n, std::size_t m) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max() / 2;
  std::uint64_t binom = 1;
  const std::size_t k = std::min(m, n - m);
  for (std::size_t i = 1; i <= k; ++i) {
    // binom * (n - k + i) / i stays integral at each step.
    const std::uint64_t factor = n - k + i;
    if (binom > cap / factor) return 2 * cap;
    binom = binom * factor / i;
  }
  return binom > cap ? 2 * cap : 2 * binom;
}

SolveTrace solve(const StandardFormLP& lp, const Basis& initial, const PivotRule& rule,
                 std::optional<std::uint64_t> max_iters) {
  const std::uint64_t limit = max_iters.value_or(default_max_iters(lp.n(), lp.m()));
  if (limit < 1) throw Error(Errc::InvalidArgument, "max_iters must be >= 1");

  Dictionary dict = dictionary(lp, initial);
  if (!dict.primal_feasible()) {
    throw Error(Errc::InfeasibleInitialBasis, "initial basis has a negative basic value");
  }
  const NormOrder order = rule.kind == PivotRule::Kind::PNorm ? rule.order : NormOrder::finite(2);
  SolveTrace trace{rule, order, basic_solution(lp, dict), {}, Outcome::Optimal, initial, dict.z0, {}};

  const StepLength step_length = [&dict](std::size_t k) -> std::optional<Rational> {
    auto r = ratio_test(dict, k);
    if (!r) return std::nullopt;
    return std::move(r->step);
  };

  for (std::size_t t = 0;; ++t) {
    const EnteringChoice choice = select_entering(dict, rule, step_length);
    if (choice.status == EnteringChoice::Status::Optimal) {
      trace.outcome = Outcome::Optimal;
      break;
    }
    const std::size_t s = choice.column;
    if (choice.status == EnteringChoice::Status::UnboundedRay) {
      trace.outcome = Outcome::Unbounded;
      trace.unbounded_variable = dict.nonbasis()[s];
      break;
    }
    if (t >= limit) {
      trace.outcome = Outcome::IterationLimit;
      break;
    }
    const auto pivot = ratio_test(dict, s);
    if (!pivot) {
      trace.outcome = Outcome::Unbounded;
      trace.unbounded_variable = dict.nonbasis()[s];
      break;
    }
    if (pivot->step.is_zero()) {
      trace.outcome = Outcome::DegeneratePivot;
      break;
    }
    const std::size_t d = *dantzig_column(dict);
    IterationRecord rec{t,
                        dict.basis,
                        dict.nonbasis()[s],
                        dict.basis[pivot->row],
                        dict.nonbasis()[d],
                        pivot->step,
                        -dict.c_bar[s],
                        -dict.c_bar[d],
                        column_pnorm(dict, s, order),
                        column_pnorm(dict, d, order),
                        dict.z0,
                        Rational()};
    dict = dictionary(lp, dict.basis.exchanged(pivot->row, rec.entering));
    rec.objective_after = dict.z0;
    trace.records.push_back(std::move(rec));
  }
  trace.final_basis = dict.basis;
  trace.final_objective = dict.z0;
  return trace;
}

namespace {

// Columns equal to e_i for every row i, when b >= 0.
std::optional<std::vector<std::size_t>> embedded_identity(const StandardFormLP& lp) {
  if (std::any_of(lp.b.begin(), lp.b.end(), [](const Rational& v) { return v.sign() < 0; })) {
    return std::nullopt;
  }
  std::vector<std::size_t> cols(lp.m());
  for (std::size_t i = 0; i < lp.m(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < lp.n() && !found; ++j) {
      bool unit = true;
      for (std::size_t r = 0; r < lp.m() && unit; ++r) {
        unit = lp.A(r, j) == Rational(r == i ? 1 : 0);
      }
      if (unit) {
        cols[i] = j;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return cols;
}

}  // namespace

Basis phase_one(const StandardFormLP& lp) {
  if (auto identity = embedded_identity(lp)) return Basis(lp, std::move(*identity));

  const std::size_t m = lp.m();
  const std::size_t n = lp.n();
  StandardFormLP aux{lp.name + "/phase1", Matrix(m, n + m), Vector(m), Vector(n + m), };
  for (std::size_t i = 0; i < m; ++i) {
    const Rational sign(lp.b[i].sign() < 0 ? -1 : 1);
    for (std::size_t j = 0; j < n; ++j) aux.A(i, j) = sign * lp.A(i, j);
    aux.A(i, n + i) = Rational(1);
    aux.b[i] = sign * lp.b[i];
    aux.c[n + i] = Rational(1);
  }
  std::vector<std::size_t> artificial(m);
  for (std::size_t i = 0; i < m; ++i) artificial[i] = n + i;
  Dictionary dict = dictionary(aux, Basis(aux, artificial));

  // Degenerate pivots are allowed here. Dantzig's rule until a basis repeats,
  // then Bland's rule (smallest index both ways), which cannot cycle.
  std::set<std::vector<std::size_t>> seen;
  bool bland = false;
  while (true) {
    if (!bland) {
      auto key = dict.basis.indices();
      std::sort(key.begin(), key.end());
      bland = !seen.insert(std::move(key)).second;
    }
    std::optional<std::size_t> s;
    if (bland) {
      for (std::size_t k = 0; k < dict.ell() && !s; ++k) {
        if (dict.c_bar[k].sign() < 0) s = k;
      }
    } else {
      s = dantzig_column(dict);
    }
    if (!s) break;
    // The auxiliary objective is bounded below by 0, so a blocking row exists.
    const auto pivot = ratio_test(dict, *s);
    dict = dictionary(aux, dict.basis.exchanged(pivot->row, dict.nonbasis()[*s]));
  }
  if (dict.z0.sign() > 0) {
    throw Error(Errc::Infeasible, "phase-one optimum is " + dict.z0.to_string() + " > 0");
  }

  // Artificials left at zero level are pivoted out on any nonzero entry.
  for (std::size_t i = 0; i < m; ++i) {
    if (dict.basis[i] < n) continue;
    std::optional<std::size_t> k;
    for (std::size_t c = 0; c < dict.ell() && !k; ++c) {
      if (dict.nonbasis()[c] < n && !dict.A_bar(i, c).is_zero()) k = c;
    }
    if (!k) throw Error(Errc::RankDeficient, "redundant row met during phase one");
    dict = dictionary(aux, dict.basis.exchanged(i, dict.nonbasis()[*k]));
  }
  return Basis(lp, dict.basis.indices());
}

}  // namespace simplexlab
