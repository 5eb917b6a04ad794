#pragma once

#include "tornheim/index.hpp"
#include "tornheim/rational.hpp"
#include "tornheim/real.hpp"

#include <optional>

namespace tornheim {

/// Controls every numeric summation. Working precision is digits + guard.
struct PrecisionConfig {
  int digits = 30;
  int guard_digits = 15;
  long max_terms = 2'000'000;
  /// log10 of the absolute tail goal; defaults to -(digits + 5).
  std::optional<double> tail_goal_log10;

  double tail_goal_exponent() const { return tail_goal_log10.value_or(-(digits + 5.0)); }
  int working_digits() const { return digits + guard_digits; }
  Precision working() const { return Precision::from_digits(working_digits()); }
  /// Throws DomainError if digits < 10 or max_terms < 100.
  void validate() const;
};

/// Base q of a q-analog; q > 1 is enforced at construction.
class QParam {
 public:
  explicit QParam(const Rational& q);

  const Rational& value() const { return q_; }
  QParam squared() const { return QParam(q_ * q_); }

 private:
  Rational q_;
};

/// A truncated series value with the rigorous bound on what was dropped.
struct SeriesEstimate {
  Real value;
  double tail_bound_log10 = 0;  // log10 of the absolute truncation bound
  long terms = 0;               // summation index reached (window size for double sums)
};

}  // namespace tornheim
