#include "simplexlab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "simplexlab/analysis.hpp"
#include "simplexlab/certified.hpp"
#include "simplexlab/error.hpp"
#include "simplexlab/simplex.hpp"

namespace simplexlab {

namespace {

// Uniform integer in [lo, hi] by rejection; unlike std::uniform_int_distribution
// the sequence is identical across standard library implementations.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return lo + static_cast<long>(v % span);
}

std::string power_str(long base, std::size_t e) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(base), e);
  return v.get_str();
}

}  // namespace

GeneratedInstance klee_minty(std::size_t m) {
  if (m < 1 || m > 30) throw Error(Errc::InvalidDimension, "Klee-Minty dimension must be in [1, 30]");
  StandardFormLP lp{"kleeminty-" + std::to_string(m), Matrix(m, 2 * m), Vector(m), Vector(2 * m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) lp.A(i, j) = Rational::parse(power_str(2, i - j + 1));
    lp.A(i, i) = Rational(1);
    lp.A(i, m + i) = Rational(1);
    lp.b[i] = Rational::parse(power_str(5, i + 1));
  }
  for (std::size_t j = 0; j < m; ++j) lp.c[j] = -Rational::parse(power_str(2, m - 1 - j));
  std::vector<std::size_t> slacks(m);
  std::iota(slacks.begin(), slacks.end(), m);
  Basis initial(lp, std::move(slacks));
  return GeneratedInstance{validate(std::move(lp)), std::move(initial)};
}

GeneratedInstance random_lp(std::size_t m, std::size_t n, std::uint64_t seed, ValueRange range,
                            unsigned resample_limit) {
  if (m < 1 || n <= m) {
    throw Error(Errc::InvalidDimension, "random_lp needs n > m >= 1, got m=" + std::to_string(m) +
                                            " n=" + std::to_string(n));
  }
  if (range.lo > range.hi) throw Error(Errc::InvalidArgument, "empty value range");
  std::mt19937_64 rng(seed);
  const long x_hi = std::max(1L, range.hi);

  for (unsigned attempt = 0; attempt < resample_limit; ++attempt) {
    StandardFormLP lp{"random-m" + std::to_string(m) + "-n" + std::to_string(n) + "-s" + std::to_string(seed),
                      Matrix(m, n), Vector(m), Vector(n)};
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) lp.A(i, j) = Rational(draw(rng, range.lo, range.hi));
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[static_cast<std::size_t>(draw(rng, 0, static_cast<long>(i)))]);
    }
    std::vector<std::size_t> basis_idx(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(basis_idx.begin(), basis_idx.end());
    Vector x_b(m);
    for (auto& v : x_b) v = Rational(draw(rng, 1, x_hi));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t r = 0; r < m; ++r) lp.b[i] += lp.A(i, basis_idx[r]) * x_b[r];
    }
    for (auto& v : lp.c) v = Rational(draw(rng, range.lo, range.hi));

    if (rank(lp.A) < m) continue;
    auto initial = Basis::try_make(lp, basis_idx);
    if (!initial) continue;
    if (dictionary(lp, *initial).optimal()) continue;
    try {
      if (!enumerate_bfs(lp).nondegenerate) continue;
    } catch (const Error&) {
      continue;
    }
    if (solve(lp, *initial, PivotRule::dantzig()).outcome != Outcome::Optimal) continue;
    return GeneratedInstance{std::move(lp), std::move(*initial)};
  }
  throw Error(Errc::ResampleLimitExceeded,
              "no acceptable instance after " + std::to_string(resample_limit) + " draws");
}

DmdpInstance dmdp_generate(std::size_t m, std::size_t k, const Rational& theta, std::uint64_t seed) {
  if (theta.sign() < 0 || theta >= Rational(1)) {
    throw Error(Errc::InvalidTheta, "discount factor must lie in [0, 1), got " + theta.to_string());
  }
  if (m < 1 || k < 2) {
    throw Error(Errc::InvalidDimension, "need m >= 1 states and k >= 2 actions per state");
  }
  const std::size_t n = m * k;
  std::mt19937_64 rng(seed);
  DmdpInstance d{m, k, theta, Matrix(m, n), Matrix(m, n), Vector(n), {}};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<long> weights(m);
    long total = 0;
    while (total == 0) {
      total = 0;
      for (auto& w : weights) total += (w = draw(rng, 0, 9));
    }
    for (std::size_t i = 0; i < m; ++i) d.P(i, j) = Rational(weights[i], total);
    d.E(j / k, j) = Rational(1);
    d.costs[j] = Rational(draw(rng, 1, 20));
  }

  StandardFormLP lp{"dmdp-m" + std::to_string(m) + "-k" + std::to_string(k) + "-t" +
                        theta.to_string() + "-s" + std::to_string(seed),
                    Matrix(m, n), Vector(m, Rational(1)), d.costs};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.A(i, j) = d.E(i, j) - theta * d.P(i, j);
  }
  std::vector<std::size_t> policy(m);
  for (std::size_t i = 0; i < m; ++i) policy[i] = i * k;
  Basis initial(lp, std::move(policy));
  d.instance = GeneratedInstance{validate(std::move(lp)), std::move(initial)};
  return d;
}

mpz_class dmdp_bound(std::size_t m, std::size_t n, const Rational& theta, NormOrder order) {
  if (theta.sign() < 0 || theta >= Rational(1)) {
    throw Error(Errc::InvalidTheta, "discount factor must lie in [0, 1), got " + theta.to_string());
  }
  if (n <= m || m < 1) throw Error(Errc::InvalidDimension, "need n > m >= 1");
  const Rational mm(static_cast<long>(m));
  const Rational slack = Rational(1) - theta;
  const Rational base = pow(mm, 3) / (slack * slack);
  const Rational log_arg = mm * mm / slack;
  const mpz_class inner = certified_ceil([&](mpfr_prec_t prec) {
    Interval factor = Interval::exact(base, prec);
    if (!order.is_infinite()) {
      factor = order.value() == 1 ? factor * Interval::exact(mm, prec)
                                  : factor * Interval::exact(mm, prec).root(order.value());
    }
    return factor * Interval::exact(log_arg, prec).log();
  });
  return mpz_class(static_cast<unsigned long>(n - m)) * inner;
}

}  // namespace simplexlab
