#include "tornheim/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace tornheim {

Precision Precision::from_digits(int decimal_digits) {
  const double bits = std::ceil(std::max(decimal_digits, 1) * 3.3219280948873623) + 8;
  return {static_cast<mpfr_prec_t>(bits)};
}

Real::Real(Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_q(value_, value.get().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(Precision p) {
  Real r(p);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::ln2(Precision p) {
  Real r(p);
  mpfr_const_log2(r.value_, MPFR_RNDN);
  return r;
}

double Real::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%#.*RZg", std::max(digits, 1), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

void Real::widen_to(mpfr_prec_t bits) {
  if (bits > mpfr_get_prec(value_)) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(mpfr_get_prec(rhs.value_));
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(mpfr_get_prec(rhs.value_));
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(mpfr_get_prec(rhs.value_));
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(mpfr_get_prec(rhs.value_));
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r({std::max(base.precision().bits, exponent.precision().bits)});
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Rational& exponent) {
  if (exponent.is_integer() && exponent.numerator().fits_slong_p()) {
    return pow(base, exponent.to_long());
  }
  return pow(base, Real(exponent, base.precision()));
}

}  // namespace tornheim
