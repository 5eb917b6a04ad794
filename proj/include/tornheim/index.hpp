#pragma once

#include "tornheim/rational.hpp"

#include <stdexcept>
#include <string>

namespace tornheim {

/// Argument failed a convergence or admissibility condition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series could not be brought under its tail goal within the term cap.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input lies outside the family that has a closed form (e.g. even weight).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Sign : int { minus = -1, plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) { return to_int(a) * to_int(b) > 0 ? Sign::plus : Sign::minus; }
constexpr Sign sign_from_int(int v) { return v < 0 ? Sign::minus : Sign::plus; }

/// Parses "+", "-", "1", "-1".
Sign parse_sign(const std::string& text);

/// Integer exponent carrying a sign; "bar" notation when the sign is minus.
struct SignedIndex {
  long value = 0;
  Sign sign = Sign::plus;

  bool barred() const { return sign == Sign::minus; }
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// Same, with a rational exponent (q-analog terms admit non-integer t).
struct SignedExponent {
  Rational value;
  Sign sign = Sign::plus;

  bool barred() const { return sign == Sign::minus; }
  friend bool operator==(const SignedExponent&, const SignedExponent&) = default;
};

inline SignedIndex bar(long value) { return {value, Sign::minus}; }
inline SignedIndex plain(long value) { return {value, Sign::plus}; }

std::string to_string(const SignedIndex& k);     // "3" or "bar(3)"
std::string to_string(const SignedExponent& k);  // "5/2" or "bar(5/2)"

}  // namespace tornheim
