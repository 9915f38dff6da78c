#include "simplexlab/analysis.hpp"

#include <algorithm>
#include <limits>

#include "simplexlab/error.hpp"

namespace simplexlab {

namespace {

std::uint64_t binomial_saturating(std::size_t n, std::size_t k) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    if (out > cap / factor) return cap;
    out = out * factor / i;
  }
  return out;
}

// Advances `idx` to the next m-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t m = idx.size();
  std::size_t i = m;
  while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

void keep_min(std::optional<Rational>& slot, const Rational& v) {
  if (!slot || v < *slot) slot = v;
}

void keep_max(std::optional<Rational>& slot, const Rational& v) {
  if (!slot || v > *slot) slot = v;
}

}  // namespace

const BfsEntry* BfsCatalog::find(const Basis& basis) const {
  for (const auto& e : entries) {
    if (e.dict.basis.same_set(basis)) return &e;
  }
  return nullptr;
}

BfsCatalog enumerate_bfs(const StandardFormLP& lp, std::uint64_t budget) {
  const std::size_t m = lp.m();
  const std::size_t n = lp.n();
  if (const auto total = binomial_saturating(n, m); total > budget) {
    throw Error(Errc::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(m) +
                                          ") subsets exceed the enumeration budget of " +
                                          std::to_string(budget));
  }
  BfsCatalog cat;
  cat.nondegenerate = true;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  do {
    ++cat.subsets_examined;
    auto dict = try_dictionary(lp, idx);
    if (!dict || !dict->primal_feasible()) continue;
    BasicSolution sol = basic_solution(lp, *dict);
    for (const auto& v : dict->b_bar) {
      if (v.sign() > 0) {
        keep_max(cat.gamma, v);
        keep_min(cat.delta, v);
      } else {
        cat.nondegenerate = false;
      }
    }
    for (const auto& cb : dict->c_bar) {
      if (cb.sign() < 0) {
        keep_max(cat.gamma_D_prime, -cb);
        keep_min(cat.delta_D_prime, -cb);
      }
    }
    cat.entries.push_back(BfsEntry{std::move(*dict), std::move(sol)});
  } while (next_combination(idx, n));

  if (cat.entries.empty()) throw Error(Errc::NoFeasibleBasis, "no feasible basis in " + lp.name);

  cat.z_star = cat.entries.front().solution.objective;
  for (const auto& e : cat.entries) cat.z_star = std::min(cat.z_star, e.solution.objective);
  for (const auto& e : cat.entries) {
    if (e.solution.objective > cat.z_star) keep_min(cat.z_second, e.solution.objective);
  }
  // Prefer a dual-feasible basis among those attaining z*.
  const BfsEntry* opt = nullptr;
  for (const auto& e : cat.entries) {
    if (e.solution.objective != cat.z_star) continue;
    if (!opt) opt = &e;
    if (e.dict.optimal()) {
      opt = &e;
      break;
    }
  }
  cat.optimal_basis = opt->dict.basis;
  return cat;
}

Interval QReport::q(mpfr_prec_t prec) const {
  const Interval powered = Interval::exact(q_powered, prec);
  if (order.is_infinite() || order.value() == 1) return powered;
  return powered.root(order.value());
}

std::string QReport::q_decimal(int digits) const { return q(256).to_decimal(digits); }

QReport compute_q(const StandardFormLP& lp, const BfsCatalog& catalog, NormOrder order) {
  if (!catalog.nondegenerate || !catalog.gamma || !catalog.delta) {
    throw Error(Errc::DegenerateInstance, "q is only defined for nondegenerate instances");
  }
  const Rational& gamma = *catalog.gamma;
  const Rational& delta = *catalog.delta;
  const Rational m(static_cast<long>(lp.m()));

  Rational norm_lo;
  Rational norm_hi;
  if (order.is_infinite()) {
    norm_lo = Rational(1);
    norm_hi = gamma / delta;
  } else {
    norm_lo = Rational(1) + pow(delta / gamma, order.value());
    norm_hi = Rational(1) + m * pow(gamma / delta, order.value());
  }

  QReport rep;
  rep.order = order;
  const PivotRule rule = PivotRule::pnorm(order);
  for (const auto& entry : catalog.entries) {
    const Dictionary& dict = entry.dict;
    const auto d = dantzig_column(dict);
    if (!d) continue;
    const std::size_t s = select_entering(dict, rule).column;
    const Rational pow_s = column_pnorm(dict, s, order).powered;
    const Rational pow_d = column_pnorm(dict, *d, order).powered;
    rep.per_nonbasis.push_back(QEntry{dict.basis, dict.nonbasis()[s], dict.nonbasis()[*d], pow_s / pow_d});

    for (std::size_t k = 0; k < dict.ell(); ++k) {
      if (dict.c_bar[k].sign() >= 0 || !ratio_test(dict, k)) continue;
      const Rational powered = column_pnorm(dict, k, order).powered;
      ++rep.norm_bounds.checked;
      if (powered < norm_lo || powered > norm_hi) {
        ++rep.norm_bounds.violations;
        if (!rep.norm_bounds.first_violation) {
          rep.norm_bounds.first_violation = std::make_pair(dict.basis, dict.nonbasis()[k]);
        }
      }
    }
  }
  if (rep.per_nonbasis.empty()) {
    throw Error(Errc::NoImprovingNonbasis, "every feasible basis is optimal; q is undefined");
  }
  rep.q_powered = rep.per_nonbasis.front().q_powered;
  for (const auto& e : rep.per_nonbasis) rep.q_powered = std::min(rep.q_powered, e.q_powered);
  rep.lower_powered = order.is_infinite() ? delta / gamma
                                          : pow(delta, order.value()) / (m * pow(gamma, order.value()));
  rep.lower_bound_holds = rep.q_powered >= rep.lower_powered;
  return rep;
}

BoundReport evaluate_bounds(const BfsCatalog& catalog, const QReport* qrep, std::size_t m,
                            std::size_t n, std::optional<NormOrder> order,
                            const Rational& x0_objective) {
  if (!catalog.nondegenerate || !catalog.gamma || !catalog.delta) {
    throw Error(Errc::DegenerateInstance, "bounds assume a nondegenerate instance");
  }
  if (!catalog.z_second) throw Error(Errc::MissingSecondBest, "only one BFS objective value exists");
  if (x0_objective <= catalog.z_star) {
    throw Error(Errc::InvalidArgument, "initial objective must exceed the optimal value");
  }
  if (qrep && (!order || qrep->order != *order)) {
    throw Error(Errc::InvalidArgument, "q report norm order does not match the requested order");
  }
  if (order && !qrep) throw Error(Errc::UndefinedQ, "p-norm bounds need q");

  BoundReport r;
  r.m = m;
  r.n = n;
  r.gamma = *catalog.gamma;
  r.delta = *catalog.delta;
  r.order = order;
  if (qrep) r.q_powered = qrep->q_powered;
  r.gap0 = x0_objective - catalog.z_star;
  r.gap_second = *catalog.z_second - catalog.z_star;

  const Rational mm(static_cast<long>(m));
  const mpz_class ell(static_cast<unsigned long>(n - m));
  const Rational km_factor = mm * r.gamma / r.delta;  // m gamma / delta
  const Rational gap_ratio = r.gap0 / r.gap_second;
  const Rational gamma_over_delta_sq = pow(r.gamma / r.delta, 2);

  auto log_gap = [&](mpfr_prec_t prec) { return Interval::exact(gap_ratio, prec).log(); };
  auto log_km = [&](mpfr_prec_t prec) { return Interval::exact(km_factor, prec).log(); };

  r.km1 = certified_ceil([&](mpfr_prec_t prec) { return Interval::exact(km_factor, prec) * log_gap(prec); });
  r.km2 = ell * certified_ceil([&](mpfr_prec_t prec) { return Interval::exact(km_factor, prec) * log_km(prec); });
  if (catalog.gamma_D_prime && catalog.delta_D_prime) {
    const Rational min_dim(static_cast<long>(std::min(m, n - m)));
    r.km3 = ceil(min_dim * r.gamma * *catalog.gamma_D_prime / (r.delta * *catalog.delta_D_prime));
  }

  if (order) {
    // m gamma / (q delta)
    auto with_q = [&](mpfr_prec_t prec) { return Interval::exact(km_factor, prec) / qrep->q(prec); };
    r.thm3 = certified_ceil([&](mpfr_prec_t prec) { return with_q(prec) * log_gap(prec); });
    r.thm4 = ell * certified_ceil([&](mpfr_prec_t prec) { return with_q(prec) * log_km(prec); });

    // m^(1 + 1/p) gamma^2 / delta^2
    auto loose = [&](mpfr_prec_t prec) {
      Interval factor = Interval::exact(mm * gamma_over_delta_sq, prec);
      if (order->is_infinite() || order->value() == 1) {
        return order->is_infinite() ? factor : factor * Interval::exact(mm, prec);
      }
      return factor * Interval::exact(mm, prec).root(order->value());
    };
    r.thm5 = certified_ceil([&](mpfr_prec_t prec) { return loose(prec) * log_gap(prec); });
    r.thm6 = ell * certified_ceil([&](mpfr_prec_t prec) { return loose(prec) * log_km(prec); });
  }
  return r;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const TraceCheck& c) { return c.pass; });
}

const TraceCheck* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

  void record(bool ok, std::size_t t, const std::string& why = {}) {
    ++check_.evaluated;
    if (!ok && check_.pass) {
      check_.pass = false;
      check_.first_failure = t;
      check_.detail = why;
    }
  }

  TraceCheck done() { return std::move(check_); }

 private:
  TraceCheck check_;
};

// q <= bound, where q is held in powered form.
bool q_at_most(const Rational& q_powered, const Rational& bound, NormOrder order) {
  if (bound.sign() < 0) return false;
  return q_powered <= pow(bound, order.power());
}

}  // namespace

VerificationReport verify_trace(const StandardFormLP& lp, const SolveTrace& trace,
                                const BfsCatalog& catalog, const QReport* qrep,
                                const DualSolution& dual_opt) {
  if (trace.outcome != Outcome::Optimal) {
    throw Error(Errc::TraceNotOptimal, std::string("trace ended with ") + to_string(trace.outcome));
  }
  if (!catalog.nondegenerate || !catalog.gamma || !catalog.delta) {
    throw Error(Errc::DegenerateInstance, "trace verification assumes a nondegenerate instance");
  }
  const bool pnorm = trace.rule.kind == PivotRule::Kind::PNorm;
  if (pnorm && (!qrep || qrep->order != trace.rule.order)) {
    throw Error(Errc::UndefinedQ, "p-norm traces need a q report with the same norm order");
  }

  // Iterates x^0 .. x^T, read back from the catalog.
  std::vector<const BfsEntry*> iterates;
  for (const auto& rec : trace.records) iterates.push_back(catalog.find(rec.basis_before));
  iterates.push_back(catalog.find(trace.final_basis));
  for (std::size_t k = 0; k < iterates.size(); ++k) {
    if (!iterates[k]) {
      throw Error(Errc::CatalogMismatch, "iterate " + std::to_string(k) + " is not a feasible basis of the catalog");
    }
    const Rational& expected = k < trace.records.size() ? trace.records[k].objective_before : trace.final_objective;
    if (iterates[k]->solution.objective != expected) {
      throw Error(Errc::CatalogMismatch, "objective of iterate " + std::to_string(k) + " differs from the catalog");
    }
  }

  const std::size_t m = lp.m();
  const Rational mm(static_cast<long>(m));
  const Rational& gamma = *catalog.gamma;
  const Rational& delta = *catalog.delta;
  const Rational& z_star = catalog.z_star;
  const NormOrder q_order = pnorm ? trace.rule.order : NormOrder::finite(1);
  // Dantzig and best improvement both decrease the objective by at least Delta_d * delta, i.e. q = 1.
  const Rational q_powered = pnorm ? qrep->q_powered : Rational(1);

  auto gap = [&](std::size_t k) { return iterates[k]->solution.objective - z_star; };
  auto x = [&](std::size_t k) -> const Vector& { return iterates[k]->solution.x; };

  CheckBuilder exchange("exchange");
  CheckBuilder decrease("decrease");
  CheckBuilder selection("selection");
  CheckBuilder l1("L1");
  CheckBuilder l2("L2");
  CheckBuilder l3_exists("L3_exists");
  CheckBuilder l3_track("L3_tracked");
  CheckBuilder duality("duality");

  const std::size_t T = trace.records.size();
  for (std::size_t t = 0; t < T; ++t) {
    const auto& rec = trace.records[t];
    const Basis& next = t + 1 < T ? trace.records[t + 1].basis_before : trace.final_basis;
    std::size_t differing = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!rec.basis_before.contains(next[i])) ++differing;
    }
    exchange.record(differing == 1 && next.contains(rec.entering) && !next.contains(rec.leaving), t);

    decrease.record(rec.objective_before - rec.objective_after == rec.delta_s * rec.step &&
                        rec.step.sign() > 0,
                    t);

    if (pnorm) {
      const unsigned e = trace.norm_order.power();
      selection.record(pow(rec.delta_s, e) * rec.norm_d.powered >= pow(rec.delta_d, e) * rec.norm_s.powered, t);
    }

    l1.record(z_star >= rec.objective_before - mm * gamma * rec.delta_d, t);

    // gap_{t+1} <= (1 - q delta / (m gamma)) gap_t  <=>  q <= (gap_t - gap_{t+1}) m gamma / (delta gap_t)
    const Rational g_t = gap(t);
    const Rational g_next = gap(t + 1);
    if (g_t.sign() > 0) {
      const Rational limit = (g_t - g_next) * mm * gamma / (delta * g_t);
      l2.record(q_at_most(q_powered, limit, q_order), t);
    } else {
      l2.record(false, t, "iteration taken from an optimal objective value");
    }

    // Existence: some basic j with x_j^t s*_j >= gap_t / m; track the largest product.
    std::optional<std::size_t> jbar;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = rec.basis_before[i];
      const Rational prod = x(t)[j] * dual_opt.s[j];
      if (!jbar || prod > best || (prod == best && j < *jbar)) {
        jbar = j;
        best = prod;
      }
    }
    l3_exists.record(best * mm >= g_t && x(t)[*jbar].sign() > 0, t);
    if (g_t.sign() > 0) {
      bool ok = true;
      for (std::size_t k = t + 1; k <= T && ok; ++k) {
        ok = x(k)[*jbar] * g_t <= mm * x(t)[*jbar] * gap(k);
      }
      l3_track.record(ok, t);
    }
  }

  for (std::size_t k = 0; k <= T; ++k) {
    const Rational lhs = objective(lp, x(k)) - dot(lp.b, dual_opt.y);
    duality.record(lhs == dot(x(k), dual_opt.s), k, "c'x - b'y != x's");
  }
  duality.record(trace.final_objective == dot(lp.b, dual_opt.y), T, "c'x* != b'y*");

  VerificationReport rep;
  rep.iterations = T;
  rep.checks = {exchange.done(), decrease.done(), selection.done(), l1.done(),
                l2.done(),       l3_exists.done(), l3_track.done(), duality.done()};

  CheckBuilder count("count");
  if (T > 0) {
    const auto order = pnorm ? std::optional<NormOrder>(trace.rule.order) : std::nullopt;
    rep.bounds = evaluate_bounds(catalog, pnorm ? qrep : nullptr, m, lp.n(), order,
                                 trace.initial_solution.objective);
    const auto& b = *rep.bounds;
    const mpz_class iters(static_cast<unsigned long>(T));
    const mpz_class ell(static_cast<unsigned long>(lp.n() - m));
    // A log factor of exactly 0 (x0 second-best, or m gamma = delta) still
    // leaves at least one pivot, resp. one pivot per eliminated variable.
    auto within = [&](const mpz_class& bound, const mpz_class& floor_value, const char* label) {
      const mpz_class allowed = bound < floor_value ? floor_value : bound;
      count.record(iters <= allowed, T, std::string(label) + " = " + bound.get_str());
    };
    if (pnorm) {
      within(*b.thm3, 1, "thm3");
      within(*b.thm4, ell, "thm4");
      within(*b.thm5, 1, "thm5");
      within(*b.thm6, ell, "thm6");
    } else {
      within(b.km1, 1, "km1");
      within(b.km2, ell, "km2");
    }
  }
  rep.checks.push_back(count.done());
  return rep;
}

}  // namespace simplexlab
