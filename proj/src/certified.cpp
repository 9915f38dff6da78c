#include "simplexlab/certified.hpp"

#include <array>
#include <utility>
#include <vector>

#include "simplexlab/error.hpp"

namespace simplexlab {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : Interval(other.prec_) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.prec_) { swap(other); }

Interval& Interval::operator=(Interval other) noexcept {
  swap(other);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Interval::swap(Interval& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval Interval::exact(const Rational& value, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_, value.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, value.raw().get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Hull of op over the four endpoint pairs, rounded outward.
void endpoint_hull(mpfr_ptr lo, mpfr_ptr hi, mpfr_srcptr alo, mpfr_srcptr ahi, mpfr_srcptr blo,
                   mpfr_srcptr bhi, BinaryOp op, mpfr_prec_t prec) {
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> pairs{
      {{alo, blo}, {alo, bhi}, {ahi, blo}, {ahi, bhi}}};
  mpfr_t down;
  mpfr_t up;
  mpfr_init2(down, prec);
  mpfr_init2(up, prec);
  mpfr_set_inf(lo, 1);
  mpfr_set_inf(hi, -1);
  for (const auto& [x, y] : pairs) {
    op(down, x, y, MPFR_RNDD);
    op(up, x, y, MPFR_RNDU);
    mpfr_min(lo, lo, down, MPFR_RNDD);
    mpfr_max(hi, hi, up, MPFR_RNDU);
  }
  mpfr_clear(down);
  mpfr_clear(up);
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  endpoint_hull(out.lo_, out.hi_, a.lo_, a.hi_, b.lo_, b.hi_, mpfr_mul, out.prec_);
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw Error(Errc::InvalidArgument, "interval division by an interval containing zero");
  }
  Interval out(std::max(a.prec_, b.prec_));
  endpoint_hull(out.lo_, out.hi_, a.lo_, a.hi_, b.lo_, b.hi_, mpfr_div, out.prec_);
  return out;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw Error(Errc::InvalidArgument, "log of a nonpositive interval");
  Interval out(prec_);
  mpfr_log(out.lo_, lo_, MPFR_RNDD);
  mpfr_log(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::root(unsigned k) const {
  if (mpfr_sgn(lo_) < 0) throw Error(Errc::InvalidArgument, "root of a negative interval");
  Interval out(prec_);
  mpfr_rootn_ui(out.lo_, lo_, k, MPFR_RNDD);
  mpfr_rootn_ui(out.hi_, hi_, k, MPFR_RNDU);
  return out;
}

std::string Interval::to_decimal(int digits) const {
  mpfr_t mid;
  mpfr_init2(mid, prec_ + 1);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  const int len = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, mid);
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, mid);
  mpfr_clear(mid);
  return std::string(buf.data());
}

mpz_class certified_ceil(const std::function<Interval(mpfr_prec_t)>& enclose, mpfr_prec_t max_prec) {
  for (mpfr_prec_t prec = 64; prec <= max_prec; prec *= 2) {
    const Interval x = enclose(prec);
    if (mpfr_nan_p(x.lo()) || mpfr_nan_p(x.hi()) || mpfr_inf_p(x.lo()) || mpfr_inf_p(x.hi())) {
      throw Error(Errc::UncertifiedCeiling, "enclosure is not finite");
    }
    mpz_class lo;
    mpz_class hi;
    mpfr_get_z(lo.get_mpz_t(), x.lo(), MPFR_RNDU);
    mpfr_get_z(hi.get_mpz_t(), x.hi(), MPFR_RNDU);
    if (lo == hi) return lo;
  }
  throw Error(Errc::UncertifiedCeiling,
              "ceiling still ambiguous at " + std::to_string(max_prec) + " bits");
}

}  // namespace simplexlab
