#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tornheim/closed_form.hpp"
#include "tornheim/numeric.hpp"
#include "tornheim/reduction.hpp"

#include <variant>

using namespace tornheim;

namespace {

const PrecisionConfig cfg30{};

Rational bracket(long n, const Rational& q) {
  Rational acc;
  for (long k = 0; k < n; ++k) acc += pow(q, k);
  return acc;
}

// Sum of the expansion at (u, v, q), with [n]_q as a geometric sum.
Rational expansion_value(const std::vector<PartialFractionTerm>& terms, long u, long v, const Rational& q) {
  Rational acc;
  for (const auto& t : terms) {
    Rational x = t.coefficient * pow(Rational(1) - q, t.one_minus_q_pow) * pow(q, t.q_power_u * u + t.q_power_v * v);
    x /= pow(bracket(u, q), t.denom_u_pow) * pow(bracket(v, q), t.denom_v_pow) * pow(bracket(u + v, q), t.denom_uv_pow);
    acc += x;
  }
  return acc;
}

std::size_t family_size(const std::vector<PartialFractionTerm>& terms, Family f) {
  return static_cast<std::size_t>(std::count_if(terms.begin(), terms.end(), [&](const auto& t) { return t.family == f; }));
}

std::size_t family_size(const Reduction& red, Family f) {
  return static_cast<std::size_t>(
      std::count_if(red.terms.begin(), red.terms.end(), [&](const auto& t) { return t.family == f; }));
}

double residual(const Reduction& red, const Rational& q) {
  const QParam qp(q);
  return oracle::log10_diff(evaluate(red, qp, cfg30), evaluate_lhs(red, qp, cfg30));
}

double tol() { return -(cfg30.digits - 3.0); }

}  // namespace

TEST_CASE("trinomial examples") {
  CHECK(trinomial(4, 1, 2) == Rational(12));
  CHECK(trinomial(Rational(-3, 2), 0, 0) == Rational(1));
  CHECK(trinomial(5, 2, 3) == Rational(10));
}

TEST_CASE("partial fractions at r = s = 1") {
  const auto terms = lemma1_expand(1, 1);
  REQUIRE(terms.size() == 3);
  // 1/([u][v]) = 1/([u][u+v]) + 1/([v][u+v]) - (1-q)/[u+v]
  CHECK(terms[0].coefficient == Rational(1));
  CHECK(terms[0].denom_u_pow == 1);
  CHECK(terms[0].denom_uv_pow == 1);
  CHECK(terms[0].q_power_u == 0);
  CHECK(terms[1].denom_v_pow == 1);
  CHECK(terms[1].denom_uv_pow == 1);
  CHECK(terms[2].coefficient == Rational(-1));
  CHECK(terms[2].one_minus_q_pow == 1);
  CHECK(terms[2].denom_uv_pow == 1);
  CHECK(terms[2].denom_u_pow + terms[2].denom_v_pow == 0);
  CHECK(expansion_value(terms, 1, 1, 2) == Rational(1));
}

TEST_CASE("partial fraction family sizes") {
  const auto t21 = lemma1_expand(2, 1);
  CHECK(family_size(t21, Family::A) == 3);
  CHECK(family_size(t21, Family::B) == 1);
  CHECK(family_size(t21, Family::C) == 1);
  for (long r = 1; r <= 6; ++r) {
    for (long s = 1; s <= 6; ++s) {
      const auto t = lemma1_expand(r, s);
      CHECK(family_size(t, Family::A) == static_cast<std::size_t>(r * (r + 1) / 2));
      CHECK(family_size(t, Family::B) == static_cast<std::size_t>(s * (s + 1) / 2));
      CHECK(family_size(t, Family::C) == static_cast<std::size_t>(std::min(r, s)));
    }
  }
}

TEST_CASE("partial fractions are exact") {
  const auto terms = lemma1_expand(2, 3);
  const Rational q(7, 2);
  CHECK(expansion_value(terms, 1, 2, q) == Rational(1) / (pow(bracket(1, q), 2) * pow(bracket(2, q), 3)));
  CHECK(verify_lemma1(1, 1, 1, 1, 2));
  CHECK(verify_lemma1(3, 2, 4, 5, Rational(3, 2)));
  CHECK(q_int_exact(5, 2) == Rational(31));

  for (long r = 1; r <= 5; ++r) {
    for (long s = 1; s <= 5; ++s) {
      const auto t = lemma1_expand(r, s);
      for (const Rational& q : {Rational(3, 2), Rational(2), Rational(7, 2)}) {
        for (long u = 1; u <= 4; ++u) {
          for (long v = 1; v <= 4; ++v) {
            CHECK(expansion_value(t, u, v, q) == Rational(1) / (pow(bracket(u, q), r) * pow(bracket(v, q), s)));
          }
        }
      }
    }
  }
}

TEST_CASE("perturbed partial fractions are rejected") {
  for (long r = 1; r <= 3; ++r) {
    for (long s = 1; s <= 3; ++s) {
      const auto terms = lemma1_expand(r, s);
      for (std::size_t i = 0; i < terms.size(); ++i) {
        auto bad = terms;
        bad[i].coefficient += 1;
        CHECK_FALSE(verify_partial_fractions(bad, r, s, 2, 3, 2));
      }
      CHECK(verify_partial_fractions(terms, r, s, 2, 3, 2));
    }
  }
}

TEST_CASE("reduction of T(1,1,t) and R(1,1,t)") {
  const Reduction t = theorem1_reduce(1, 1, 1, Variant::T);
  REQUIRE(t.terms.size() == 3);
  for (int i = 0; i < 2; ++i) {
    CHECK(t.terms[i].coefficient == Rational(1));
    CHECK(std::get<DoubleQZeta>(t.terms[i].kind) == DoubleQZeta{{2, Sign::plus}, {1, Sign::plus}, 0});
  }
  CHECK(t.terms[2].coefficient == Rational(-1));
  CHECK(std::get<PhiTerm>(t.terms[2].kind) == PhiTerm{{2, Sign::plus}, 1});
  CHECK(residual(t, 2) < tol());

  const Reduction r = theorem1_reduce(1, 1, 1, Variant::R);
  REQUIRE(r.terms.size() == 3);
  CHECK(std::get<DoubleQZeta>(r.terms[0].kind) == DoubleQZeta{{2, Sign::minus}, {1, Sign::minus}, 0});
  CHECK(std::get<DoubleQZeta>(r.terms[1].kind) == DoubleQZeta{{2, Sign::plus}, {1, Sign::minus}, 0});
  const auto& c = std::get<QSquaredZeta>(r.terms[2].kind);
  CHECK(c.index == Rational(2));
  CHECK(c.one_minus_q_pow == 1);
  CHECK(c.one_plus_q_pow == Rational(-2));
  CHECK(residual(r, 2) < tol());

  // the correction term carries weight: dropping or negating it is visible
  Reduction flipped = r;
  flipped.terms[2].coefficient = -flipped.terms[2].coefficient;
  CHECK(residual(flipped, 2) > -3);
}

TEST_CASE("reduction family sizes") {
  for (Variant v : {Variant::T, Variant::S, Variant::R}) {
    const Reduction red = theorem1_reduce(3, 2, Rational(1, 2), v);
    CHECK(family_size(red, Family::A) == 6);
    CHECK(family_size(red, Family::B) == 3);
    CHECK(family_size(red, Family::C) == 2);
  }
}

TEST_CASE("reductions match the series they rewrite") {
  for (Variant v : {Variant::T, Variant::S, Variant::R}) {
    for (const Rational& t : {Rational(0), Rational(1, 2), Rational(3), Rational(-1, 3)}) {
      for (long r = 1; r <= 3; ++r) {
        for (long s = 1; s <= 3; ++s) {
          CAPTURE(to_string(v));
          CAPTURE(r);
          CAPTURE(s);
          CAPTURE(t.to_string());
          const Reduction red = theorem1_reduce(r, s, t, v);
          const QParam q(Rational(5, 2));
          // independent left side straight from the numeric engine
          const VariantSigns sg = signs_of(v);
          const Real lhs = tornheim_q(r, s, t, sg.sigma, sg.tau, q, cfg30, Window::square, kernels::Backend::serial).value;
          CHECK(oracle::log10_diff(evaluate(red, q, cfg30), lhs) < tol());
        }
      }
    }
  }
}

TEST_CASE("weight homogeneity") {
  for (Variant v : {Variant::T, Variant::S, Variant::R}) {
    for (long r = 1; r <= 5; ++r) {
      for (long s = 1; s <= 5; ++s) {
        for (const Rational& t : {Rational(0), Rational(2), Rational(7, 3)}) {
          for (const auto& term : theorem1_reduce(r, s, t, v).terms) {
            CHECK(term_weight(term) == Rational(r + s) + t);
            CHECK(term.coefficient.is_integer());
            if (term.coefficient.is_zero()) CHECK(term.family != Family::C);
          }
        }
      }
    }
    for (long r = 1; r <= 4; ++r) {
      for (long s = 1; s <= 4; ++s) {
        for (long t = 1; t <= 3; ++t) {
          for (const auto& term : corollary1_reduce(r, s, t, v)) {
            CHECK(term.first.value + term.second.value == r + s + t);
          }
        }
      }
    }
  }
}

TEST_CASE("u and v symmetry of T and S") {
  for (Variant v : {Variant::T, Variant::S}) {
    for (long r = 1; r <= 3; ++r) {
      for (long s = r + 1; s <= 4; ++s) {
        const QParam q(3);
        const Real a = evaluate(theorem1_reduce(r, s, 1, v), q, cfg30);
        const Real b = evaluate(theorem1_reduce(s, r, 1, v), q, cfg30);
        CHECK(oracle::log10_diff(a, b) < tol());
      }
    }
  }
}

TEST_CASE("product coefficients") {
  for (long s = 1; s <= 5; ++s) {
    for (long a = 0; a <= 4; ++a) {
      for (long b = 0; b <= s - 1 - a; ++b) {
        CHECK(trinomial(a + s - 1, a, b) == product_coefficient(a, b, s));
        CHECK(product_coefficient(a, b, s) == binomial(a + s - 1, s - 1) * binomial(s - 1, b));
      }
    }
  }
}

TEST_CASE("product decompositions") {
  const Reduction tt = product_decompose(1, 1, ProductVariant::TT);
  CHECK(tt == theorem1_reduce(1, 1, 0, Variant::T));
  const QParam q2(2);
  const Real z1 = q_zeta1(1, Sign::plus, q2, cfg30).value;
  CHECK(oracle::log10_diff(evaluate(tt, q2, cfg30), z1 * z1) < tol());

  const Reduction ts = product_decompose(2, 1, ProductVariant::TS);
  CHECK(ts.variant == Variant::R);
  const QParam q3(3);
  const Real lhs = q_zeta1(2, Sign::plus, q3, cfg30).value * q_zeta1(1, Sign::minus, q3, cfg30).value;
  CHECK(oracle::log10_diff(evaluate(ts, q3, cfg30), lhs) < tol());

  const Reduction ss = product_decompose(2, 3, ProductVariant::SS);
  const Real ss_lhs = q_zeta1(2, Sign::minus, q3, cfg30).value * q_zeta1(3, Sign::minus, q3, cfg30).value;
  CHECK(oracle::log10_diff(evaluate(ss, q3, cfg30), ss_lhs) < tol());
}

TEST_CASE("classical reductions") {
  const auto t111 = corollary1_reduce(1, 1, 1, Variant::T);
  REQUIRE(t111.size() == 2);
  CHECK(t111[0] == ClassicalTerm{1, plain(2), plain(1)});
  CHECK(t111[1] == ClassicalTerm{1, plain(2), plain(1)});

  const auto r111 = corollary1_reduce(1, 1, 1, Variant::R);
  REQUIRE(r111.size() == 2);
  CHECK(r111[0] == ClassicalTerm{1, bar(2), bar(1)});
  CHECK(r111[1] == ClassicalTerm{1, plain(2), bar(1)});

  const auto s232 = corollary1_reduce(2, 3, 2, Variant::S);
  for (const auto& term : s232) CHECK(term.first.barred());

  try {
    corollary1_reduce(2, 1, 0, Variant::T);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("s+t>1 violated") != std::string::npos);
    CHECK(std::string(e.what()).find("r+t>1") == std::string::npos);
  }
  try {
    corollary1_reduce(1, 1, 0, Variant::T);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("r+t>1 violated") != std::string::npos);
    CHECK(std::string(e.what()).find("s+t>1 violated") != std::string::npos);
  }
  CHECK_NOTHROW(corollary1_reduce(1, 1, 0, Variant::S));
  CHECK_THROWS_AS(corollary1_reduce(1, 1, -1, Variant::S), DomainError);
  CHECK_NOTHROW(corollary1_reduce(2, 1, 0, Variant::R));
  CHECK_THROWS_AS(corollary1_reduce(1, 2, 0, Variant::R), DomainError);
}

TEST_CASE("classical reduction against a direct double sum") {
  // T(2,2,2) straight from its definition with a coarse double-precision sum
  const double naive = kernels::naive_tornheim(2, 2, 2, Sign::plus, Sign::plus, 2000, kernels::Backend::parallel);
  const Real reduced = evaluate(corollary1_reduce(2, 2, 2, Variant::T), cfg30);
  CHECK(reduced.to_double() == doctest::Approx(naive).epsilon(1e-4));
}

TEST_CASE("reduction json round-trip") {
  for (Variant v : {Variant::T, Variant::S, Variant::R}) {
    for (const Rational& t : {Rational(0), Rational(5, 2), Rational(-1)}) {
      const Reduction red = theorem1_reduce(3, 2, t, v);
      const nlohmann::json j = red;
      CHECK(nlohmann::json::parse(j.dump()).get<Reduction>() == red);
    }
  }
  CHECK_THROWS(nlohmann::json::parse(R"({"variant":"Q","r":1,"s":1,"t":"0","terms":[]})").get<Reduction>());
}

TEST_CASE("printing is ordered by family") {
  const std::string text = to_string(theorem1_reduce(2, 1, 1, Variant::R));
  const auto first_c = text.find("zeta_{q^2}");
  REQUIRE(first_c != std::string::npos);
  CHECK(text.find("zeta_q[", first_c) == std::string::npos);
  CHECK(variant_of(Sign::plus, Sign::minus) == Variant::R);
  CHECK_THROWS_AS(variant_of(Sign::minus, Sign::plus), DomainError);
  CHECK(parse_variant("S") == Variant::S);
}
