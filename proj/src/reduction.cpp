#include "tornheim/reduction.hpp"

#include "tornheim/numeric.hpp"

#include <algorithm>
#include <sstream>

namespace tornheim {

VariantSigns signs_of(Variant v) {
  switch (v) {
    case Variant::T: return {Sign::plus, Sign::plus};
    case Variant::S: return {Sign::minus, Sign::minus};
    case Variant::R: return {Sign::plus, Sign::minus};
  }
  throw DomainError("unknown variant");
}

Variant variant_of(Sign sigma, Sign tau) {
  if (sigma == Sign::plus && tau == Sign::plus) return Variant::T;
  if (sigma == Sign::minus && tau == Sign::minus) return Variant::S;
  if (sigma == Sign::plus && tau == Sign::minus) return Variant::R;
  throw DomainError("signs (-,+) are R with r and s exchanged; pass them as (+,-)");
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::T: return "T";
    case Variant::S: return "S";
    case Variant::R: return "R";
  }
  return "?";
}

Variant parse_variant(const std::string& text) {
  if (text == "T") return Variant::T;
  if (text == "S") return Variant::S;
  if (text == "R") return Variant::R;
  throw DomainError("unknown series '" + text + "' (expected T, S or R)");
}

Rational term_weight(const ReductionTerm& term) {
  return std::visit(
      [](const auto& k) -> Rational {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, DoubleQZeta>) {
          return k.outer.value + k.inner.value + Rational(k.one_minus_q_pow);
        } else if constexpr (std::is_same_v<K, PhiTerm>) {
          return k.index.value + Rational(k.one_minus_q_pow);
        } else {
          return k.index + Rational(k.one_minus_q_pow);
        }
      },
      term.kind);
}

// ---- partial fractions -----------------------------------------------------

std::vector<PartialFractionTerm> lemma1_expand(long r, long s) {
  if (r < 1 || s < 1) throw DomainError("partial fractions need r, s >= 1");
  std::vector<PartialFractionTerm> out;
  for (long a = 0; a <= r - 1; ++a) {
    for (long b = 0; b <= r - 1 - a; ++b) {
      out.push_back({trinomial(a + s - 1, a, b), s - 1 - b, a, static_cast<int>(r - a - b), 0,
                     static_cast<int>(s + a), static_cast<int>(b), Family::A});
    }
  }
  for (long a = 0; a <= s - 1; ++a) {
    for (long b = 0; b <= s - 1 - a; ++b) {
      out.push_back({trinomial(a + r - 1, a, b), a, r - 1 - b, 0, static_cast<int>(s - a - b),
                     static_cast<int>(r + a), static_cast<int>(b), Family::B});
    }
  }
  for (long j = 1; j <= std::min(r, s); ++j) {
    out.push_back({-trinomial(r + s - j - 1, r - j, s - j), s - j, r - j, 0, 0, static_cast<int>(r + s - j),
                   static_cast<int>(j), Family::C});
  }
  return out;
}

Rational q_int_exact(long n, const Rational& q) {
  if (n < 1) throw DomainError("[n]_q needs n >= 1");
  Rational acc;
  Rational power(1);
  for (long j = 0; j < n; ++j) {
    acc += power;
    power *= q;
  }
  return acc;
}

Rational evaluate_partial_fractions(const std::vector<PartialFractionTerm>& terms, long u, long v,
                                    const Rational& q) {
  const Rational qu = q_int_exact(u, q);
  const Rational qv = q_int_exact(v, q);
  const Rational quv = q_int_exact(u + v, q);
  Rational total;
  for (const auto& t : terms) {
    Rational x = t.coefficient * pow(Rational(1) - q, t.one_minus_q_pow) *
                 pow(q, t.q_power_u * u + t.q_power_v * v);
    x /= pow(qu, t.denom_u_pow) * pow(qv, t.denom_v_pow) * pow(quv, t.denom_uv_pow);
    total += x;
  }
  return total;
}

bool verify_partial_fractions(const std::vector<PartialFractionTerm>& terms, long r, long s, long u, long v,
                              const Rational& q) {
  if (u < 1 || v < 1) throw DomainError("u, v must be positive");
  if (q == Rational(1)) throw DomainError("q = 1 not allowed");
  const Rational lhs = Rational(1) / (pow(q_int_exact(u, q), r) * pow(q_int_exact(v, q), s));
  return evaluate_partial_fractions(terms, u, v, q) == lhs;
}

bool verify_lemma1(long r, long s, long u, long v, const Rational& q) {
  return verify_partial_fractions(lemma1_expand(r, s), r, s, u, v, q);
}

// ---- reductions ------------------------------------------------------------

Reduction theorem1_reduce(long r, long s, const Rational& t, Variant variant) {
  if (r < 1 || s < 1) throw DomainError("r, s >= 1 violated");
  Reduction out{variant, r, s, t, {}};

  // Signs on (larger, smaller) summation index for the two families.
  Sign a_outer = Sign::plus, a_inner = Sign::plus, b_outer = Sign::plus, b_inner = Sign::plus;
  switch (variant) {
    case Variant::T: break;
    case Variant::S: a_outer = b_outer = Sign::minus; break;
    case Variant::R: a_outer = a_inner = b_inner = Sign::minus; break;
  }

  for (long a = 0; a <= r - 1; ++a) {
    for (long b = 0; b <= r - 1 - a; ++b) {
      DoubleQZeta z{{Rational(s + a) + t, a_outer}, {Rational(r - a - b), a_inner}, static_cast<int>(b)};
      out.terms.push_back({trinomial(a + s - 1, a, b), z, Family::A});
    }
  }
  for (long a = 0; a <= s - 1; ++a) {
    for (long b = 0; b <= s - 1 - a; ++b) {
      DoubleQZeta z{{Rational(r + a) + t, b_outer}, {Rational(s - a - b), b_inner}, static_cast<int>(b)};
      out.terms.push_back({trinomial(a + r - 1, a, b), z, Family::B});
    }
  }
  for (long j = 1; j <= std::min(r, s); ++j) {
    const Rational c = trinomial(r + s - j - 1, r - j, s - j);
    const Rational index = Rational(r + s - j) + t;
    const int one_minus = static_cast<int>(j);
    if (variant == Variant::R) {
      // sum over u+v = m of (-1)^v is -1 for even m and 0 for odd m, which
      // turns the subtracted family into an added sum over even m
      out.terms.push_back({c, QSquaredZeta{index, one_minus, Rational(j - r - s) - t}, Family::C});
    } else {
      const Sign sg = variant == Variant::S ? Sign::minus : Sign::plus;
      out.terms.push_back({-c, PhiTerm{{index, sg}, one_minus}, Family::C});
    }
  }
  return out;
}

Reduction product_decompose(long r, long s, ProductVariant variant) {
  switch (variant) {
    case ProductVariant::TT: return theorem1_reduce(r, s, 0, Variant::T);
    case ProductVariant::SS: return theorem1_reduce(r, s, 0, Variant::S);
    case ProductVariant::TS: return theorem1_reduce(r, s, 0, Variant::R);
  }
  throw DomainError("unknown product variant");
}

Rational product_coefficient(long a, long b, long s) {
  return binomial(a + s - 1, s - 1) * binomial(s - 1, b);
}

std::vector<ClassicalTerm> corollary1_reduce(long r, long s, long t, Variant variant) {
  if (r < 1 || s < 1) throw DomainError("r, s >= 1 violated");
  const long need_r = variant == Variant::S ? 0 : 1;
  const long need_s = variant == Variant::T ? 1 : 0;
  std::vector<std::string> failed;
  if (!(r + t > need_r)) failed.push_back("r+t>" + std::to_string(need_r) + " violated");
  if (!(s + t > need_s)) failed.push_back("s+t>" + std::to_string(need_s) + " violated");
  if (!failed.empty()) {
    std::string msg = failed.front();
    for (std::size_t i = 1; i < failed.size(); ++i) msg += ", " + failed[i];
    throw DomainError(msg);
  }

  const VariantSigns sg = signs_of(variant);
  // In the limit only the b = 0 terms survive; sigma^u tau^v splits onto
  // the larger index m = u+v and the smaller one as below.
  const Sign a_outer = sg.tau, a_inner = sg.sigma * sg.tau;
  const Sign b_outer = sg.sigma, b_inner = sg.sigma * sg.tau;
  std::vector<ClassicalTerm> out;
  for (long a = 0; a <= r - 1; ++a) {
    out.push_back({binomial(a + s - 1, s - 1), {s + t + a, a_outer}, {r - a, a_inner}});
  }
  for (long a = 0; a <= s - 1; ++a) {
    out.push_back({binomial(a + r - 1, r - 1), {r + t + a, b_outer}, {s - a, b_inner}});
  }
  return out;
}

// ---- numeric evaluation ----------------------------------------------------

Real evaluate(const Reduction& reduction, const QParam& q, const PrecisionConfig& cfg) {
  const Precision p = cfg.working();
  const Real one_minus_q(Rational(1) - q.value(), p);
  const Real one_plus_q(Rational(1) + q.value(), p);
  Real acc(p);
  for (const auto& term : reduction.terms) {
    Real value = std::visit(
        [&](const auto& k) -> Real {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, DoubleQZeta>) {
            return q_zeta2(k.outer, k.inner, q, cfg).value * pow(one_minus_q, static_cast<long>(k.one_minus_q_pow));
          } else if constexpr (std::is_same_v<K, PhiTerm>) {
            return phi_q(k.index.value, k.index.sign, q, cfg).value *
                   pow(one_minus_q, static_cast<long>(k.one_minus_q_pow));
          } else {
            return q_zeta1(k.index, Sign::plus, q.squared(), cfg).value *
                   pow(one_minus_q, static_cast<long>(k.one_minus_q_pow)) * pow(one_plus_q, k.one_plus_q_pow);
          }
        },
        term.kind);
    acc += Real(term.coefficient, p) * value;
  }
  return acc;
}

Real evaluate_lhs(const Reduction& reduction, const QParam& q, const PrecisionConfig& cfg) {
  const VariantSigns sg = signs_of(reduction.variant);
  return tornheim_q(reduction.r, reduction.s, reduction.t, sg.sigma, sg.tau, q, cfg).value;
}

Real evaluate(const std::vector<ClassicalTerm>& terms, const PrecisionConfig& cfg) {
  const Precision p = cfg.working();
  Real acc(p);
  for (const auto& term : terms) {
    acc += Real(term.coefficient, p) * classical_double_euler(term.first, term.second, cfg).value;
  }
  return acc;
}

// ---- rendering -------------------------------------------------------------

namespace {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  throw DomainError("unknown family '" + s + "'");
}

std::string power_factor(const std::string& base, const Rational& e) {
  if (e.is_zero()) return "";
  if (e == Rational(1)) return base + " * ";
  const bool simple = e.is_integer() && e.sign() > 0;
  return base + "^" + (simple ? e.to_string() : "(" + e.to_string() + ")") + " * ";
}

std::string signed_coefficient(const Rational& c) {
  return (c.sign() < 0 ? "- " : "+ ") + abs(c).to_string() + " * ";
}

std::string kind_string(const QTermKind& kind) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, DoubleQZeta>) {
          return power_factor("(1-q)", k.one_minus_q_pow) + "zeta_q[" + to_string(k.outer) + ", " +
                 to_string(k.inner) + "]";
        } else if constexpr (std::is_same_v<K, PhiTerm>) {
          return power_factor("(1-q)", k.one_minus_q_pow) + "phi[" + to_string(k.index) + "]";
        } else {
          return power_factor("(1-q)", k.one_minus_q_pow) + power_factor("(1+q)", k.one_plus_q_pow) +
                 "zeta_{q^2}[" + k.index.to_string() + "]";
        }
      },
      kind);
}

nlohmann::json exponent_json(const SignedExponent& e) {
  return {{"value", e.value.to_string()}, {"sign", to_int(e.sign)}};
}

SignedExponent exponent_from(const nlohmann::json& j) {
  return {Rational::parse(j.at("value").get<std::string>()), sign_from_int(j.at("sign").get<int>())};
}

}  // namespace

std::string to_string(const Reduction& reduction) {
  std::ostringstream os;
  os << to_string(reduction.variant) << "[" << reduction.r << ", " << reduction.s << ", " << reduction.t << "] =\n";
  for (const auto& term : reduction.terms) {
    os << "  " << signed_coefficient(term.coefficient) << kind_string(term.kind) << "\n";
  }
  return os.str();
}

std::string to_string(const std::vector<ClassicalTerm>& terms) {
  std::ostringstream os;
  for (const auto& term : terms) {
    os << "  " << signed_coefficient(term.coefficient) << "zeta(" << to_string(term.first) << ", "
       << to_string(term.second) << ")\n";
  }
  return os.str();
}

void to_json(nlohmann::json& j, const Reduction& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& term : r.terms) {
    nlohmann::json tj{{"coeff", term.coefficient.to_string()}, {"family", family_name(term.family)}};
    std::visit(
        [&](const auto& k) {
          using K = std::decay_t<decltype(k)>;
          tj["one_minus_q"] = k.one_minus_q_pow;
          if constexpr (std::is_same_v<K, DoubleQZeta>) {
            tj["kind"] = "zeta_q";
            tj["outer"] = exponent_json(k.outer);
            tj["inner"] = exponent_json(k.inner);
          } else if constexpr (std::is_same_v<K, PhiTerm>) {
            tj["kind"] = "phi";
            tj["index"] = exponent_json(k.index);
          } else {
            tj["kind"] = "zeta_q2";
            tj["index"] = k.index.to_string();
            tj["one_plus_q"] = k.one_plus_q_pow.to_string();
          }
        },
        term.kind);
    terms.push_back(std::move(tj));
  }
  j = {{"variant", to_string(r.variant)}, {"r", r.r}, {"s", r.s}, {"t", r.t.to_string()}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, Reduction& r) {
  r.variant = parse_variant(j.at("variant").get<std::string>());
  r.r = j.at("r").get<long>();
  r.s = j.at("s").get<long>();
  r.t = Rational::parse(j.at("t").get<std::string>());
  r.terms.clear();
  for (const auto& tj : j.at("terms")) {
    ReductionTerm term;
    term.coefficient = Rational::parse(tj.at("coeff").get<std::string>());
    term.family = parse_family(tj.at("family").get<std::string>());
    const int omq = tj.at("one_minus_q").get<int>();
    const std::string kind = tj.at("kind").get<std::string>();
    if (kind == "zeta_q") {
      term.kind = DoubleQZeta{exponent_from(tj.at("outer")), exponent_from(tj.at("inner")), omq};
    } else if (kind == "phi") {
      term.kind = PhiTerm{exponent_from(tj.at("index")), omq};
    } else if (kind == "zeta_q2") {
      term.kind = QSquaredZeta{Rational::parse(tj.at("index").get<std::string>()), omq,
                               Rational::parse(tj.at("one_plus_q").get<std::string>())};
    } else {
      throw DomainError("unknown term kind '" + kind + "'");
    }
    r.terms.push_back(std::move(term));
  }
}

}  // namespace tornheim
