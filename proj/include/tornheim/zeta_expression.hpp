#pragma once

#include "tornheim/index.hpp"
#include "tornheim/rational.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tornheim {

/// pi^a * log(2)^b * zeta(k1) * zeta(k2) * ... with every k odd and >= 3.
struct ZetaMonomial {
  int pi_exponent = 0;
  int log2_exponent = 0;
  std::vector<int> odd_zeta_factors;  // sorted ascending

  int weight() const;

  /// Orders by (weight, pi exponent, log 2 exponent, odd factors).
  friend std::strong_ordering operator<=>(const ZetaMonomial& a, const ZetaMonomial& b);
  friend bool operator==(const ZetaMonomial&, const ZetaMonomial&) = default;
};

ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b);

/// Element of Q[pi, log 2, zeta(3), zeta(5), ...]. Zero coefficients are
/// never stored, so structural equality is value equality in this basis.
class ZetaExpression {
 public:
  using Terms = std::map<ZetaMonomial, Rational>;

  ZetaExpression() = default;
  ZetaExpression(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static ZetaExpression monomial(const ZetaMonomial& m, const Rational& coefficient = Rational(1));
  static ZetaExpression pi_power(int exponent);
  static ZetaExpression log2();
  static ZetaExpression odd_zeta(int k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ZetaMonomial& m) const;

  /// Rebuilds the term map dropping zeros; already-canonical input is unchanged.
  ZetaExpression canonical() const;

  ZetaExpression& operator+=(const ZetaExpression& rhs);
  ZetaExpression& operator-=(const ZetaExpression& rhs);
  ZetaExpression& operator*=(const Rational& scale);

  friend ZetaExpression operator+(ZetaExpression a, const ZetaExpression& b) { return a += b; }
  friend ZetaExpression operator-(ZetaExpression a, const ZetaExpression& b) { return a -= b; }
  friend ZetaExpression operator*(const ZetaExpression& a, const ZetaExpression& b);
  friend ZetaExpression operator*(ZetaExpression a, const Rational& s) { return a *= s; }
  friend ZetaExpression operator*(const Rational& s, ZetaExpression a) { return a *= s; }
  ZetaExpression operator-() const { return *this * Rational(-1); }

  friend bool operator==(const ZetaExpression&, const ZetaExpression&) = default;

  /// e.g. "(1/16)*pi^2*zeta(3) - (27/32)*zeta(5)"; highest pi power first.
  std::string to_string() const;

 private:
  void add_term(const ZetaMonomial& m, const Rational& c);

  Terms terms_;
};

// Named forms of the ring operations.
inline ZetaExpression expr_add(const ZetaExpression& a, const ZetaExpression& b) { return a + b; }
inline ZetaExpression expr_mul(const ZetaExpression& a, const ZetaExpression& b) { return a * b; }
inline ZetaExpression expr_scale(const ZetaExpression& a, const Rational& s) { return a * s; }

/// c with zeta(k) = c * pi^k, for even k >= 2.
Rational zeta_even_as_pi(long k);

/// zeta(k) for sign plus (k >= 2), and zeta(bar k) = (2^(1-k) - 1) zeta(k),
/// or -log 2 at k = 1, for sign minus. Even arguments come back as pi powers.
ZetaExpression zeta_const(const SignedIndex& k);

/// Reads the to_string form back; also accepts zeta(k) for even k and
/// products such as "3*zeta(3)*zeta(5)". Throws DomainError on bad input.
ZetaExpression parse_expression(std::string_view text);

// JSON: array of {"coeff": "p/q", "pi": int, "log2": int, "zeta": [int...]}
// in ascending monomial order.
void to_json(nlohmann::json& j, const ZetaExpression& e);
void from_json(const nlohmann::json& j, ZetaExpression& e);

}  // namespace tornheim
