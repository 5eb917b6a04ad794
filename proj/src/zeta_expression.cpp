#include "tornheim/zeta_expression.hpp"

#include "tornheim/bernoulli.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace tornheim {

int ZetaMonomial::weight() const {
  return pi_exponent + log2_exponent +
         std::accumulate(odd_zeta_factors.begin(), odd_zeta_factors.end(), 0);
}

std::strong_ordering operator<=>(const ZetaMonomial& a, const ZetaMonomial& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.pi_exponent <=> b.pi_exponent; c != 0) return c;
  if (auto c = a.log2_exponent <=> b.log2_exponent; c != 0) return c;
  return std::lexicographical_compare_three_way(a.odd_zeta_factors.begin(), a.odd_zeta_factors.end(),
                                                b.odd_zeta_factors.begin(), b.odd_zeta_factors.end());
}

ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b) {
  ZetaMonomial m;
  m.pi_exponent = a.pi_exponent + b.pi_exponent;
  m.log2_exponent = a.log2_exponent + b.log2_exponent;
  std::merge(a.odd_zeta_factors.begin(), a.odd_zeta_factors.end(), b.odd_zeta_factors.begin(),
             b.odd_zeta_factors.end(), std::back_inserter(m.odd_zeta_factors));
  return m;
}

ZetaExpression::ZetaExpression(const Rational& constant) { add_term(ZetaMonomial{}, constant); }

ZetaExpression ZetaExpression::monomial(const ZetaMonomial& m, const Rational& coefficient) {
  ZetaMonomial sorted = m;
  std::sort(sorted.odd_zeta_factors.begin(), sorted.odd_zeta_factors.end());
  for (int k : sorted.odd_zeta_factors) {
    if (k < 3 || k % 2 == 0) {
      throw std::invalid_argument("odd zeta factor must be odd and >= 3, got " + std::to_string(k));
    }
  }
  if (sorted.pi_exponent < 0 || sorted.log2_exponent < 0) {
    throw std::invalid_argument("monomial exponents must be nonnegative");
  }
  ZetaExpression e;
  e.add_term(sorted, coefficient);
  return e;
}

ZetaExpression ZetaExpression::pi_power(int exponent) { return monomial(ZetaMonomial{exponent, 0, {}}); }

ZetaExpression ZetaExpression::log2() { return monomial(ZetaMonomial{0, 1, {}}); }

ZetaExpression ZetaExpression::odd_zeta(int k) { return monomial(ZetaMonomial{0, 0, {k}}); }

Rational ZetaExpression::coefficient(const ZetaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

ZetaExpression ZetaExpression::canonical() const {
  ZetaExpression out;
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

void ZetaExpression::add_term(const ZetaMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ZetaExpression& ZetaExpression::operator+=(const ZetaExpression& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ZetaExpression& ZetaExpression::operator-=(const ZetaExpression& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ZetaExpression& ZetaExpression::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scale;
  return *this;
}

ZetaExpression operator*(const ZetaExpression& a, const ZetaExpression& b) {
  ZetaExpression out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

namespace {

std::string monomial_body(const ZetaMonomial& m) {
  std::vector<std::string> parts;
  if (m.pi_exponent == 1) parts.emplace_back("pi");
  if (m.pi_exponent > 1) parts.push_back("pi^" + std::to_string(m.pi_exponent));
  if (m.log2_exponent == 1) parts.emplace_back("log(2)");
  if (m.log2_exponent > 1) parts.push_back("log(2)^" + std::to_string(m.log2_exponent));
  for (int k : m.odd_zeta_factors) parts.push_back("zeta(" + std::to_string(k) + ")");
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

}  // namespace

std::string ZetaExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const std::string body = monomial_body(m);
    if (body.empty()) {
      os << mag.to_string();
      continue;
    }
    if (mag != Rational(1)) {
      if (mag.is_integer()) {
        os << mag.to_string() << "*";
      } else {
        os << "(" << mag.to_string() << ")*";
      }
    }
    os << body;
  }
  return os.str();
}

Rational zeta_even_as_pi(long k) {
  if (k < 2 || k % 2 != 0) {
    throw DomainError("zeta_even_as_pi needs an even argument >= 2, got " + std::to_string(k));
  }
  const long m = k / 2;
  // zeta(2m) = (-1)^(m+1) B_2m (2 pi)^2m / (2 (2m)!)
  Rational c = bernoulli(k) * pow(Rational(2), k) / (Rational(2) * factorial(k));
  return (m % 2 == 0) ? -c : c;
}

ZetaExpression zeta_const(const SignedIndex& k) {
  if (k.value < 1) throw DomainError("zeta argument must be >= 1, got " + std::to_string(k.value));
  if (k.value == 1) {
    if (k.sign == Sign::plus) throw DomainError("zeta(1) diverges");
    return -ZetaExpression::log2();
  }
  const int kk = static_cast<int>(k.value);
  ZetaExpression z = (kk % 2 == 0)
                         ? ZetaExpression::pi_power(kk) * zeta_even_as_pi(kk)
                         : ZetaExpression::odd_zeta(kk);
  if (k.sign == Sign::plus) return z;
  return z * (pow(Rational(2), 1 - k.value) - Rational(1));
}

void to_json(nlohmann::json& j, const ZetaExpression& e) {
  j = nlohmann::json::array();
  for (const auto& [m, c] : e.terms()) {
    j.push_back({{"coeff", c.to_string()},
                 {"pi", m.pi_exponent},
                 {"log2", m.log2_exponent},
                 {"zeta", m.odd_zeta_factors}});
  }
}

void from_json(const nlohmann::json& j, ZetaExpression& e) {
  if (!j.is_array()) throw std::invalid_argument("zeta expression JSON must be an array");
  ZetaExpression out;
  for (const auto& item : j) {
    ZetaMonomial m;
    m.pi_exponent = item.value("pi", 0);
    m.log2_exponent = item.value("log2", 0);
    m.odd_zeta_factors = item.value("zeta", std::vector<int>{});
    const Rational c = Rational::parse(item.at("coeff").get<std::string>());
    out += ZetaExpression::monomial(m, c);
  }
  e = std::move(out);
}

}  // namespace tornheim

namespace tornheim {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  ZetaExpression parse() {
    ZetaExpression total;
    skip();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      ZetaExpression term = parse_term();
      total += negative ? -term : term;
      skip();
      if (pos_ == text_.size()) break;
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return total;
  }

 private:
  ZetaExpression parse_term() {
    ZetaExpression term(Rational(1));
    for (;;) {
      term = term * parse_factor();
      skip();
      if (!accept('*')) return term;
    }
  }

  ZetaExpression parse_factor() {
    skip();
    if (accept('(')) {
      const Rational r = parse_rational();
      skip();
      expect(')');
      return ZetaExpression(r);
    }
    if (keyword("pi")) return ZetaExpression::pi_power(static_cast<int>(exponent()));
    if (keyword("log(2)")) {
      ZetaExpression out(Rational(1));
      for (long e = exponent(); e > 0; --e) out = out * ZetaExpression::log2();
      return out;
    }
    if (keyword("zeta(")) {
      const long k = parse_integer();
      skip();
      expect(')');
      const ZetaExpression z = zeta_const(plain(k));
      ZetaExpression out(Rational(1));
      for (long e = exponent(); e > 0; --e) out = out * z;
      return out;
    }
    return ZetaExpression(parse_rational());
  }

  long exponent() {
    skip();
    if (!accept('^')) return 1;
    skip();
    return parse_integer();
  }

  Rational parse_rational() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                   text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      fail("bad number '" + std::string(text_.substr(start, pos_ - start)) + "'");
    }
  }

  long parse_integer() {
    const Rational r = parse_rational();
    if (!r.is_integer()) fail("expected an integer");
    return r.to_long();
  }

  bool keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse expression at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ZetaExpression parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace tornheim
