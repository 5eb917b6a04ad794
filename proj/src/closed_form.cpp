#include "tornheim/closed_form.hpp"

#include <tuple>

namespace tornheim {

std::string to_string(ZeroConvention c) {
  return c == ZeroConvention::analytic ? "zeta(0;-1) = -1/2" : "zeta(0;-1) = +1/2";
}

namespace {

// zeta(k; sign) as it enters the parity formula: zeta(0; .) per the chosen
// convention and zeta(1; +1) = 0, neither of which is a value of zeta.
ZetaExpression formula_zeta(long k, Sign sign, ZeroConvention convention) {
  if (k == 0) {
    const bool flip = sign == Sign::minus && convention == ZeroConvention::flipped;
    return ZetaExpression(Rational(flip ? 1 : -1, 2));
  }
  if (k == 1 && sign == Sign::plus) return ZetaExpression();
  return zeta_const({k, sign});
}

ZetaExpression parity_formula(long s, long t, Sign sigma, Sign tau, ZeroConvention convention) {
  const Sign st = sigma * tau;
  ZetaExpression out;
  if (s % 2 == 0) out += formula_zeta(s, sigma, convention) * formula_zeta(t, tau, convention);
  out -= formula_zeta(s + t, st, convention) * Rational(1, 2);
  ZetaExpression sums;
  for (long k = 0; 2 * k <= t; ++k) {
    sums += formula_zeta(2 * k, st, convention) * formula_zeta(s + t - 2 * k, sigma, convention) *
            binomial(s + t - 2 * k - 1, s - 1);
  }
  for (long k = 0; 2 * k <= s; ++k) {
    sums += formula_zeta(2 * k, st, convention) * formula_zeta(s + t - 2 * k, tau, convention) *
            binomial(s + t - 2 * k - 1, t - 1);
  }
  if (t % 2 != 0) sums = -sums;
  return out + sums;
}

// zeta(s, 1; sigma, +1) for even s.
ZetaExpression parity_formula_t1(long s, Sign sigma) {
  ZetaExpression out = zeta_const({s + 1, sigma}) * Rational(s - 1, 2) + zeta_const(plain(s + 1)) * Rational(1, 2);
  for (long k = 1; k <= s / 2 - 1; ++k) out -= zeta_const({2 * k, sigma}) * zeta_const(plain(s + 1 - 2 * k));
  return out;
}

// Euler: zeta(s, 1) for every s >= 2.
ZetaExpression euler_s1(long s) {
  ZetaExpression out = zeta_const(plain(s + 1)) * Rational(s, 2);
  ZetaExpression sum;
  for (long k = 2; k <= s - 1; ++k) sum += zeta_const(plain(k)) * zeta_const(plain(s + 1 - k));
  return out - sum * Rational(1, 2);
}

std::string pair_string(const SignedIndex& a, const SignedIndex& b) {
  return "zeta(" + to_string(a) + ", " + to_string(b) + ")";
}

}  // namespace

EvaluationResult double_euler_evaluate(const SignedIndex& first, const SignedIndex& second,
                                       ZeroConvention convention) {
  const long s = first.value;
  const long t = second.value;
  const std::string args = pair_string(first, second);
  if (s < 1 || t < 1) throw DomainError(args + ": indices must be positive");
  if (first.sign == Sign::plus && s < 2) throw DomainError(args + " diverges: s>1 violated for the leading index");

  if (t == 1 && second.sign == Sign::plus) {
    if (first.sign == Sign::plus) return {euler_s1(s), {{"euler_s1", args}}};
    if (s % 2 != 0) throw UnsupportedError(args + " has even weight; no closed form");
    return {parity_formula_t1(s, first.sign), {{"parity_t1", args}}};
  }
  if ((s + t) % 2 == 0) throw UnsupportedError(args + " has even weight; no closed form");
  return {parity_formula(s, t, first.sign, second.sign, convention), {{"parity", args}}};
}

ZetaExpression double_euler_closed(const SignedIndex& first, const SignedIndex& second,
                                   ZeroConvention convention) {
  return double_euler_evaluate(first, second, convention).expression;
}

EvaluationResult tornheim_closed(long r, long s, long t, Variant variant, ZeroConvention convention) {
  const std::string name = to_string(variant) + "(" + std::to_string(r) + "," + std::to_string(s) + "," +
                           std::to_string(t) + ")";
  if ((r + s + t) % 2 == 0) throw UnsupportedError(name + " has even weight; no closed form, numeric only");
  EvaluationResult out;
  const std::vector<ClassicalTerm> terms = corollary1_reduce(r, s, t, variant);
  out.provenance.push_back({"reduce_to_double_euler", name});
  bool uses_zero = false;
  for (const auto& term : terms) {
    EvaluationResult part = double_euler_evaluate(term.first, term.second, convention);
    out.expression += part.expression * term.coefficient;
    for (auto& step : part.provenance) {
      uses_zero = uses_zero || step.rule == "parity";
      out.provenance.push_back(std::move(step));
    }
  }
  if (uses_zero) out.provenance.push_back({"zero_convention", to_string(convention)});
  return out;
}

const std::vector<ReferenceValue>& reference_values() {
  static const std::vector<ReferenceValue> table = [] {
    const std::vector<std::tuple<Variant, long, long, long, const char*>> raw{
        {Variant::R, 1, 1, 1, "-(5/8)*zeta(3)"},
        {Variant::R, 1, 1, 3, "(1/16)*pi^2*zeta(3) - (27/32)*zeta(5)"},
        {Variant::R, 1, 2, 2, "(5/48)*pi^2*zeta(3) - (3/2)*zeta(5)"},
        {Variant::R, 1, 3, 1, "(1/12)*pi^2*zeta(3) - (59/32)*zeta(5)"},
        {Variant::R, 2, 1, 2, "-(5/16)*pi^2*zeta(3) + (107/32)*zeta(5)"},
        {Variant::R, 2, 2, 1, "-(5/24)*pi^2*zeta(3) + (59/32)*zeta(5)"},
        {Variant::R, 3, 1, 1, "(1/8)*pi^2*zeta(3) - (59/32)*zeta(5)"},
        {Variant::S, 5, 5, 5, "(7/73728)*pi^4*zeta(11) + (35/24576)*pi^2*zeta(13) + (63/8192)*zeta(15)"},
        {Variant::S, 7, 7, 7,
         "(31/35389440)*pi^6*zeta(15) + (49/1966080)*pi^4*zeta(17) + (77/262144)*pi^2*zeta(19)"
         " + (429/262144)*zeta(21)"},
        {Variant::R, 5, 5, 5,
         "(16375/147456)*pi^4*zeta(11) + (573335/49152)*pi^2*zeta(13) - (2064195/16384)*zeta(15)"},
        {Variant::R, 7, 7, 7,
         "(1048543/70778880)*pi^6*zeta(15) + (7339969/3932160)*pi^4*zeta(17)"
         " + (80740121/524288)*pi^2*zeta(19) - (899676921/524288)*zeta(21)"},
        {Variant::R, 9, 9, 9,
         "(13421747/7046430720)*pi^8*zeta(19) + (738197141/2113929216)*pi^6*zeta(21)"
         " + (1919313253/67108864)*pi^4*zeta(23) + (143948506845/67108864)*pi^2*zeta(25)"
         " - (1631416447375/67108864)*zeta(27)"},
    };
    std::vector<ReferenceValue> out;
    for (const auto& [v, r, s, t, text] : raw) out.push_back({v, r, s, t, parse_expression(text)});
    return out;
  }();
  return table;
}

void to_json(nlohmann::json& j, const EvaluationResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : r.provenance) steps.push_back({{"rule", step.rule}, {"arguments", step.arguments}});
  j = {{"expression", r.expression}, {"provenance", steps}};
}

void from_json(const nlohmann::json& j, EvaluationResult& r) {
  r.expression = j.at("expression").get<ZetaExpression>();
  r.provenance.clear();
  for (const auto& step : j.at("provenance")) {
    r.provenance.push_back({step.at("rule").get<std::string>(), step.at("arguments").get<std::string>()});
  }
}

}  // namespace tornheim
