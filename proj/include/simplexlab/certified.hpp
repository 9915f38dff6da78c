#pragma once

#include <mpfr.h>

#include <functional>
#include <string>

#include "simplexlab/rational.hpp"

namespace simplexlab {

// Closed interval with outward-rounded MPFR endpoints. Used to evaluate the
// transcendental bound formulas tightly enough to certify their ceilings.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other) noexcept;
  ~Interval();

  static Interval exact(const Rational& value, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }
  const __mpfr_struct* lo() const { return lo_; }
  const __mpfr_struct* hi() const { return hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval log() const;              // natural log; requires lo > 0
  Interval root(unsigned k) const;   // k-th root; requires lo >= 0

  // Midpoint rendered with `digits` significant digits. Not authoritative.
  std::string to_decimal(int digits = 12) const;

 private:
  void swap(Interval& other) noexcept;

  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

// Smallest integer >= x, where `enclose(prec)` returns an interval containing
// x at working precision `prec`. Precision doubles until both endpoints share
// a ceiling; throws Error(UncertifiedCeiling) past `max_prec` bits.
mpz_class certified_ceil(const std::function<Interval(mpfr_prec_t)>& enclose,
                         mpfr_prec_t max_prec = 1 << 16);

}  // namespace simplexlab
