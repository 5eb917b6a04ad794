#include "tornheim/verify.hpp"

#include "tornheim/numeric.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace tornheim {

namespace {

using Case = std::function<CaseResult()>;

CaseResult guarded(const std::string& name, const Case& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::numeric_limits<double>::quiet_NaN(), e.what()};
  }
}

std::vector<CaseResult> run_cases(const std::vector<std::pair<std::string, Case>>& cases,
                                  kernels::Backend backend) {
  std::vector<CaseResult> out(cases.size());
  const long n = static_cast<long>(cases.size());
  if (backend == kernels::Backend::serial) {
    for (long i = 0; i < n; ++i) out[i] = guarded(cases[i].first, cases[i].second);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) out[i] = guarded(cases[i].first, cases[i].second);
  return out;
}

CaseResult compare(const std::string& name, const Real& lhs, const Real& rhs, double tolerance_log10) {
  const double residual = (lhs - rhs).log10_abs();
  return {name, residual <= tolerance_log10, residual, ""};
}

std::string triple(Variant v, long r, long s, const Rational& t) {
  return to_string(v) + "(" + std::to_string(r) + "," + std::to_string(s) + "," + t.to_string() + ")";
}

}  // namespace

std::size_t SweepReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.passed ? 0 : 1;
  return n;
}

double default_tolerance_log10(const PrecisionConfig& cfg) { return -(cfg.digits - 3.0); }

Real tornheim_numeric(Variant variant, long r, long s, long t, const PrecisionConfig& cfg) {
  return evaluate(corollary1_reduce(r, s, t, variant), cfg);
}

SweepReport verify_lemma1_sweep(long max_rs, long max_uv, const std::vector<Rational>& qs,
                                kernels::Backend backend) {
  std::vector<std::pair<std::string, Case>> cases;
  for (long r = 1; r <= max_rs; ++r) {
    for (long s = 1; s <= max_rs; ++s) {
      for (const auto& q : qs) {
        for (long u = 1; u <= max_uv; ++u) {
          for (long v = 1; v <= max_uv; ++v) {
            const std::string name = "lemma1 r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                     " u=" + std::to_string(u) + " v=" + std::to_string(v) + " q=" + q.to_string();
            cases.emplace_back(name, [=] {
              const bool ok = verify_lemma1(r, s, u, v, q);
              return CaseResult{name, ok, ok ? -std::numeric_limits<double>::infinity() : 0.0, "exact"};
            });
          }
        }
      }
    }
  }
  return {"lemma1", run_cases(cases, backend)};
}

SweepReport verify_theorem1_sweep(long max_rs, const std::vector<Rational>& ts, const std::vector<Rational>& qs,
                                  const PrecisionConfig& cfg, double tolerance_log10, kernels::Backend backend) {
  std::vector<std::pair<std::string, Case>> cases;
  for (Variant v : {Variant::T, Variant::S, Variant::R}) {
    for (long r = 1; r <= max_rs; ++r) {
      for (long s = 1; s <= max_rs; ++s) {
        for (const auto& t : ts) {
          for (const auto& q : qs) {
            const std::string name = "theorem1 " + triple(v, r, s, t) + " q=" + q.to_string();
            cases.emplace_back(name, [=] {
              const Reduction red = theorem1_reduce(r, s, t, v);
              const QParam qp(q);
              const VariantSigns sg = signs_of(v);
              // one thread per case, so the kernel itself runs serially
              const Real lhs = tornheim_q(r, s, t, sg.sigma, sg.tau, qp, cfg, Window::triangular,
                                          kernels::Backend::serial).value;
              return compare(name, lhs, evaluate(red, qp, cfg), tolerance_log10);
            });
          }
        }
      }
    }
  }
  return {"theorem1", run_cases(cases, backend)};
}

SweepReport verify_corollary1_sweep(long max, const PrecisionConfig& cfg, double tolerance_log10,
                                    ZeroConvention convention, kernels::Backend backend) {
  std::vector<std::pair<std::string, Case>> cases;
  for (Variant v : {Variant::T, Variant::S, Variant::R}) {
    for (long r = 1; r <= max; ++r) {
      for (long s = 1; s <= max; ++s) {
        for (long t = 1; t <= max; ++t) {
          if ((r + s + t) % 2 == 0) continue;
          const std::string name = "corollary1 " + triple(v, r, s, t);
          cases.emplace_back(name, [=] {
            const ZetaExpression closed = tornheim_closed(r, s, t, v, convention).expression;
            return compare(name, expr_numeric(closed, cfg), tornheim_numeric(v, r, s, t, cfg), tolerance_log10);
          });
        }
      }
    }
  }
  return {"corollary1", run_cases(cases, backend)};
}

SweepReport verify_products_q(long max_rs, const std::vector<Rational>& qs, const PrecisionConfig& cfg,
                              double tolerance_log10, kernels::Backend backend) {
  struct Shape {
    ProductVariant variant;
    Sign first, second;
    const char* name;
  };
  const Shape shapes[] = {{ProductVariant::TT, Sign::plus, Sign::plus, "zq[r]zq[s]"},
                          {ProductVariant::SS, Sign::minus, Sign::minus, "zq[bar r]zq[bar s]"},
                          {ProductVariant::TS, Sign::plus, Sign::minus, "zq[r]zq[bar s]"}};
  std::vector<std::pair<std::string, Case>> cases;
  for (const auto& shape : shapes) {
    for (long r = 1; r <= max_rs; ++r) {
      for (long s = 1; s <= max_rs; ++s) {
        for (const auto& q : qs) {
          const std::string name = std::string("product ") + shape.name + " r=" + std::to_string(r) +
                                   " s=" + std::to_string(s) + " q=" + q.to_string();
          cases.emplace_back(name, [=] {
            const QParam qp(q);
            const Real lhs = q_zeta1(r, shape.first, qp, cfg).value * q_zeta1(s, shape.second, qp, cfg).value;
            return compare(name, lhs, evaluate(product_decompose(r, s, shape.variant), qp, cfg), tolerance_log10);
          });
        }
      }
    }
  }
  return {"corollary2", run_cases(cases, backend)};
}

SweepReport verify_products_classical(long max_rs, const PrecisionConfig& cfg, double tolerance_log10,
                                      kernels::Backend backend) {
  std::vector<std::pair<std::string, Case>> cases;
  for (Variant v : {Variant::T, Variant::S, Variant::R}) {
    const VariantSigns sg = signs_of(v);
    // zeta(r) needs r >= 2 wherever its sign is plus
    const long r_min = sg.sigma == Sign::plus ? 2 : 1;
    const long s_min = sg.tau == Sign::plus ? 2 : 1;
    for (long r = r_min; r <= max_rs; ++r) {
      for (long s = s_min; s <= max_rs; ++s) {
        const std::string name = "product classical " + triple(v, r, s, 0);
        cases.emplace_back(name, [=] {
          const Real lhs = classical_zeta(SignedIndex{r, sg.sigma}, cfg) * classical_zeta(SignedIndex{s, sg.tau}, cfg);
          return compare(name, lhs, tornheim_numeric(v, r, s, 0, cfg), tolerance_log10);
        });
      }
    }
  }
  return {"corollary3", run_cases(cases, backend)};
}

SweepReport verify_reference_table(const PrecisionConfig& cfg, double tolerance_log10, ZeroConvention convention,
                                   kernels::Backend backend) {
  std::vector<std::pair<std::string, Case>> cases;
  for (const auto& ref : reference_values()) {
    const std::string name = "table " + triple(ref.variant, ref.r, ref.s, ref.t);
    cases.emplace_back(name, [=] {
      const ZetaExpression got = tornheim_closed(ref.r, ref.s, ref.t, ref.variant, convention).expression;
      if (!(got == ref.value)) return CaseResult{name, false, 0.0, "closed form " + got.to_string()};
      CaseResult c = compare(name, expr_numeric(got, cfg), tornheim_numeric(ref.variant, ref.r, ref.s, ref.t, cfg),
                             tolerance_log10);
      c.detail = got.to_string();
      return c;
    });
  }
  return {"table", run_cases(cases, backend)};
}

CaseResult verify_expression(Variant variant, long r, long s, long t, const ZetaExpression& claimed,
                             const PrecisionConfig& cfg, double tolerance_log10) {
  const std::string name = "expression " + triple(variant, r, s, t);
  return guarded(name, [&] {
    CaseResult c = compare(name, expr_numeric(claimed, cfg), tornheim_numeric(variant, r, s, t, cfg), tolerance_log10);
    c.detail = claimed.to_string();
    return c;
  });
}

}  // namespace tornheim
