#pragma once

#include "tornheim/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>

namespace tornheim {

/// Binary precision carried by each Real. No process-wide default exists;
/// binary operations produce the larger of the operand precisions.
struct Precision {
  mpfr_prec_t bits = 128;

  static Precision from_digits(int decimal_digits);
  friend bool operator==(Precision, Precision) = default;
};

/// Owning RAII wrapper over mpfr_t, round-to-nearest throughout.
class Real {
 public:
  explicit Real(Precision p = {});
  Real(long value, Precision p);
  Real(const Rational& value, Precision p);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(Precision p);
  static Real ln2(Precision p);

  Precision precision() const { return {mpfr_get_prec(value_)}; }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log10 |x|; -inf for zero.
  double log10_abs() const;

  /// `digits` significant digits, truncated toward zero, so that a longer
  /// rendering of a more accurate value extends a shorter one.
  std::string to_string(int digits) const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  void widen_to(mpfr_prec_t bits);

  mpfr_t value_;
};

Real abs(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
/// base^exponent, using integer powering when the exponent is an integer.
Real pow(const Real& base, const Rational& exponent);

}  // namespace tornheim
