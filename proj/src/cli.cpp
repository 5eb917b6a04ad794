#include "tornheim/cli.hpp"

#include "tornheim/closed_form.hpp"
#include "tornheim/numeric.hpp"
#include "tornheim/reduction.hpp"
#include "tornheim/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>

namespace tornheim::cli {

namespace {

using nlohmann::json;

constexpr long max_table_weight = 15;

struct Common {
  int digits = 30;
  std::string format = "human";
  std::string q;
  std::string signs;

  bool as_json() const { return format == "json"; }
  std::optional<QParam> q_param() const {
    if (q.empty()) return std::nullopt;
    return QParam(Rational::parse(q));
  }
  PrecisionConfig config() const {
    PrecisionConfig cfg;
    cfg.digits = digits;
    cfg.validate();
    return cfg;
  }
};

void add_common(CLI::App* app, Common& c, bool with_signs) {
  app->add_option("--digits", c.digits, "Significant decimal digits")->capture_default_str();
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"human", "json"}))->capture_default_str();
  app->add_option("--q", c.q, "Base q > 1 of the q-analog (rational, e.g. 3/2)");
  if (with_signs) app->add_option("--signs", c.signs, "Signs on (u, v) or (s1, s2), e.g. +- ; use --signs=-+ for a leading minus");
}

std::string power_of_ten(double log10_value) {
  if (std::isinf(log10_value) && log10_value < 0) return "0";
  if (std::isnan(log10_value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "10^%.1f", log10_value);
  return buf;
}

Sign sign_char(char c) {
  if (c == '+') return Sign::plus;
  if (c == '-') return Sign::minus;
  throw DomainError(std::string("bad sign '") + c + "' (expected + or -)");
}

std::vector<Sign> parse_signs(const std::string& text, std::size_t count) {
  if (text.size() != count) {
    throw DomainError("--signs needs " + std::to_string(count) + " characters from {+,-}, got '" + text + "'");
  }
  std::vector<Sign> out;
  for (char c : text) out.push_back(sign_char(c));
  return out;
}

// "3", "5/2" or "bar(3)".
SignedExponent parse_signed(const std::string& token) {
  if (token.rfind("bar(", 0) == 0 && token.back() == ')') {
    return {Rational::parse(token.substr(4, token.size() - 5)), Sign::minus};
  }
  return {Rational::parse(token), Sign::plus};
}

long as_integer(const Rational& x, const char* what) {
  if (!x.is_integer()) throw DomainError(std::string(what) + " must be an integer here, got " + x.to_string());
  return x.to_long();
}

void need_args(const std::vector<std::string>& args, std::size_t n, const std::string& what) {
  if (args.size() != n) {
    throw DomainError(what + " takes " + std::to_string(n) + " arguments, got " + std::to_string(args.size()));
  }
}

std::string triple_name(const std::string& series, const std::vector<Rational>& a) {
  return series + "(" + a[0].to_string() + "," + a[1].to_string() + "," + a[2].to_string() + ")";
}

// ---- eval ------------------------------------------------------------------

struct EvalOutput {
  std::string name;
  Real value;
  double bound_log10;
  long terms;
  std::optional<EvaluationResult> closed;
  std::string note;
};

EvalOutput eval_tornheim(const std::string& series, const std::vector<std::string>& args, const Common& c) {
  need_args(args, 3, series);
  std::vector<Rational> a;
  for (const auto& s : args) a.push_back(Rational::parse(s));
  VariantSigns sg = signs_of(parse_variant(series));
  if (!c.signs.empty()) {
    const auto s = parse_signs(c.signs, 2);
    sg = {s[0], s[1]};
  }
  const PrecisionConfig cfg = c.config();

  if (auto q = c.q_param()) {
    const SeriesEstimate est = tornheim_q(a[0], a[1], a[2], sg.sigma, sg.tau, *q, cfg);
    const std::string name = "T[" + a[0].to_string() + "," + a[1].to_string() + "," + a[2].to_string() + ";" +
                             (sg.sigma == Sign::plus ? "+" : "-") + (sg.tau == Sign::plus ? "+" : "-") +
                             "] at q=" + q->value().to_string();
    return {name, est.value, est.tail_bound_log10, est.terms, std::nullopt, ""};
  }

  long r = as_integer(a[0], "r");
  long s = as_integer(a[1], "s");
  const long t = as_integer(a[2], "t");
  if (sg.sigma == Sign::minus && sg.tau == Sign::plus) {
    std::swap(r, s);  // relabel u <-> v
    std::swap(sg.sigma, sg.tau);
  }
  const Variant v = variant_of(sg.sigma, sg.tau);
  const std::string name = to_string(v) + "(" + std::to_string(r) + "," + std::to_string(s) + "," +
                           std::to_string(t) + ")";
  const std::vector<ClassicalTerm> terms = corollary1_reduce(r, s, t, v);
  const Real value = evaluate(terms, cfg);
  const double bound = -(cfg.working_digits() + 3.0);
  if ((r + s + t) % 2 == 0) return {name, value, bound, 0, std::nullopt, "no closed form, numeric only"};
  return {name, value, bound, 0, tornheim_closed(r, s, t, v), ""};
}

EvalOutput eval_zeta2(const std::vector<std::string>& args, const Common& c) {
  need_args(args, 2, "zeta2");
  SignedExponent first = parse_signed(args[0]);
  SignedExponent second = parse_signed(args[1]);
  if (!c.signs.empty()) {
    const auto s = parse_signs(c.signs, 2);
    first.sign = s[0];
    second.sign = s[1];
  }
  const PrecisionConfig cfg = c.config();
  if (auto q = c.q_param()) {
    const SeriesEstimate est = q_zeta2(first, second, *q, cfg);
    return {"zeta_q[" + to_string(first) + ", " + to_string(second) + "] at q=" + q->value().to_string(), est.value,
            est.tail_bound_log10, est.terms, std::nullopt, ""};
  }
  const SignedIndex a{as_integer(first.value, "s1"), first.sign};
  const SignedIndex b{as_integer(second.value, "s2"), second.sign};
  const SeriesEstimate est = classical_double_euler(a, b, cfg);
  const std::string name = "zeta(" + to_string(a) + ", " + to_string(b) + ")";
  try {
    return {name, est.value, est.tail_bound_log10, est.terms, double_euler_evaluate(a, b), ""};
  } catch (const UnsupportedError&) {
    return {name, est.value, est.tail_bound_log10, est.terms, std::nullopt, "no closed form, numeric only"};
  }
}

EvalOutput eval_qzeta(const std::vector<std::string>& args, const Common& c) {
  need_args(args, 1, "qzeta");
  SignedExponent s = parse_signed(args[0]);
  if (!c.signs.empty()) s.sign = parse_signs(c.signs, 1)[0];
  const auto q = c.q_param();
  if (!q) throw DomainError("qzeta needs --q");
  const SeriesEstimate est = q_zeta1(s.value, s.sign, *q, c.config());
  return {"zeta_q[" + to_string(s) + "] at q=" + q->value().to_string(), est.value, est.tail_bound_log10, est.terms,
          std::nullopt, ""};
}

int cmd_eval(const std::string& series, const std::vector<std::string>& args, const Common& c, std::ostream& out) {
  EvalOutput r = [&] {
    if (series == "T" || series == "S" || series == "R") return eval_tornheim(series, args, c);
    if (series == "zeta2") return eval_zeta2(args, c);
    if (series == "qzeta") return eval_qzeta(args, c);
    throw DomainError("unknown series '" + series + "' (expected T, S, R, zeta2 or qzeta)");
  }();
  const PrecisionConfig cfg = c.config();
  const std::string value = render(r.value, cfg);
  if (c.as_json()) {
    json j{{"series", r.name},         {"digits", cfg.digits}, {"value", value},
           {"bound_log10", r.bound_log10}, {"terms", r.terms},   {"q", c.q.empty() ? json() : json(c.q)}};
    j["closed_form"] = r.closed ? json(*r.closed) : json();
    if (!r.note.empty()) j["note"] = r.note;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  if (r.closed) {
    out << r.name << " = " << r.closed->expression.to_string() << " ≈ " << value << "\n";
  } else {
    if (!r.note.empty()) out << r.name << ": " << r.note << "\n";
    out << r.name << " ≈ " << value << "\n";
  }
  out << "error bound: " << power_of_ten(r.bound_log10);
  if (r.terms > 0) out << " (" << r.terms << " terms)";
  out << "\n";
  return exit_ok;
}

// ---- reduce ----------------------------------------------------------------

int cmd_reduce(const std::string& series, const std::vector<std::string>& args, bool classical, const Common& c,
               std::ostream& out) {
  if (series == "TT" || series == "SS" || series == "TS") {
    need_args(args, 2, series);
    const long r = as_integer(Rational::parse(args[0]), "r");
    const long s = as_integer(Rational::parse(args[1]), "s");
    const ProductVariant pv = series == "TT" ? ProductVariant::TT
                              : series == "SS" ? ProductVariant::SS
                                               : ProductVariant::TS;
    const Reduction red = product_decompose(r, s, pv);
    if (c.as_json()) {
      out << json(red).dump(2) << "\n";
    } else {
      out << series << " product, r=" << r << ", s=" << s << " (t = 0):\n" << to_string(red);
    }
    return exit_ok;
  }

  need_args(args, 3, series);
  const Variant v = parse_variant(series);
  std::vector<Rational> a;
  for (const auto& s : args) a.push_back(Rational::parse(s));
  const long r = as_integer(a[0], "r");
  const long s = as_integer(a[1], "s");

  if (classical) {
    const long t = as_integer(a[2], "t");
    const auto terms = corollary1_reduce(r, s, t, v);
    if (c.as_json()) {
      json arr = json::array();
      for (const auto& term : terms) {
        arr.push_back({{"coeff", term.coefficient.to_string()},
                       {"first", to_string(term.first)},
                       {"second", to_string(term.second)}});
      }
      out << json{{"series", triple_name(series, a)}, {"terms", arr}}.dump(2) << "\n";
    } else {
      out << triple_name(series, a) << " =\n" << to_string(terms);
    }
    return exit_ok;
  }

  const Reduction red = theorem1_reduce(r, s, a[2], v);
  if (c.as_json()) {
    json j = red;
    if (auto q = c.q_param()) {
      const PrecisionConfig cfg = c.config();
      j["lhs"] = render(evaluate_lhs(red, *q, cfg), cfg);
      j["rhs"] = render(evaluate(red, *q, cfg), cfg);
    }
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << to_string(red);
  if (auto q = c.q_param()) {
    const PrecisionConfig cfg = c.config();
    const Real lhs = evaluate_lhs(red, *q, cfg);
    const Real rhs = evaluate(red, *q, cfg);
    out << "at q=" << q->value() << ": series ≈ " << render(lhs, cfg) << "\n"
        << "          reduction ≈ " << render(rhs, cfg) << "\n"
        << "          |difference| = " << power_of_ten((lhs - rhs).log10_abs()) << "\n";
  }
  return exit_ok;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string family;
  std::vector<std::string> args;
  long max = 0;
  bool serial = false;
  std::string convention = "analytic";
  std::string expression;
};

void print_report(const std::vector<SweepReport>& reports, const Common& c, std::ostream& out) {
  if (c.as_json()) {
    json arr = json::array();
    for (const auto& rep : reports) {
      json cases = json::array();
      for (const auto& cs : rep.cases) {
        cases.push_back({{"name", cs.name},
                         {"passed", cs.passed},
                         {"residual", power_of_ten(cs.residual_log10)},
                         {"detail", cs.detail}});
      }
      arr.push_back({{"family", rep.family}, {"failures", rep.failures()}, {"cases", cases}});
    }
    out << arr.dump(2) << "\n";
    return;
  }
  for (const auto& rep : reports) {
    for (const auto& cs : rep.cases) {
      out << (cs.passed ? "PASS " : "FAIL ") << cs.name << "  residual " << power_of_ten(cs.residual_log10);
      if (!cs.detail.empty() && (!cs.passed || cs.detail != "exact")) out << "  " << cs.detail;
      out << "\n";
    }
    out << "summary " << rep.family << ": " << rep.cases.size() - rep.failures() << " passed, " << rep.failures()
        << " failed\n";
  }
}

std::vector<Rational> q_list(const Common& c, std::vector<Rational> defaults) {
  if (c.q.empty()) return defaults;
  const Rational q = Rational::parse(c.q);
  QParam{q};  // validates q > 1
  return {q};
}

int cmd_verify(const VerifyOptions& o, const Common& c, std::ostream& out) {
  const PrecisionConfig cfg = c.config();
  const double tol = default_tolerance_log10(cfg);
  const auto backend = o.serial ? kernels::Backend::serial : kernels::Backend::parallel;
  ZeroConvention conv = ZeroConvention::analytic;
  if (o.convention == "flipped") conv = ZeroConvention::flipped;
  auto max_or = [&](long d) { return o.max > 0 ? o.max : d; };

  std::vector<SweepReport> reports;
  if (o.family == "lemma1") {
    const long m = max_or(5);
    reports.push_back(verify_lemma1_sweep(m, m + 1, q_list(c, {Rational(3, 2), Rational(2), Rational(7, 2)}), backend));
  } else if (o.family == "theorem1") {
    reports.push_back(verify_theorem1_sweep(max_or(4), {Rational(0), Rational(1), Rational(2), Rational(1, 2)},
                                            q_list(c, {Rational(3, 2), Rational(2), Rational(3)}), cfg, tol, backend));
  } else if (o.family == "corollary1") {
    reports.push_back(verify_corollary1_sweep(max_or(5), cfg, tol, conv, backend));
  } else if (o.family == "corollary2") {
    reports.push_back(verify_products_q(max_or(4), q_list(c, {Rational(3, 2), Rational(2)}), cfg, tol, backend));
    reports.push_back(verify_products_classical(max_or(5), cfg, tol, backend));
  } else if (o.family == "table") {
    reports.push_back(verify_reference_table(cfg, tol, conv, backend));
  } else if (o.family == "expression") {
    need_args(o.args, 4, "verify expression");
    if (o.expression.empty()) throw DomainError("verify expression needs --expr");
    const Variant v = parse_variant(o.args[0]);
    const long r = as_integer(Rational::parse(o.args[1]), "r");
    const long s = as_integer(Rational::parse(o.args[2]), "s");
    const long t = as_integer(Rational::parse(o.args[3]), "t");
    ZetaExpression claimed;
    if (o.expression.front() == '[') {
      claimed = json::parse(o.expression).get<ZetaExpression>();
    } else {
      claimed = parse_expression(o.expression);
    }
    reports.push_back({"expression", {verify_expression(v, r, s, t, claimed, cfg, tol)}});
  } else {
    throw DomainError("unknown identity family '" + o.family +
                      "' (expected lemma1, theorem1, corollary1, corollary2, table or expression)");
  }
  print_report(reports, c, out);
  for (const auto& rep : reports) {
    if (!rep.all_passed()) return exit_verify_failed;
  }
  return exit_ok;
}

// ---- table -----------------------------------------------------------------

int cmd_table(long max_weight, const Common& c, std::ostream& out, std::ostream& err) {
  if (max_weight > max_table_weight) {
    err << "refusing --max-weight " << max_weight << " > " << max_table_weight
        << "; use 'eval' for individual high-weight values\n";
    return exit_usage;
  }
  json rows = json::array();
  for (long w = 3; w <= max_weight; w += 2) {
    if (!c.as_json()) out << "weight " << w << "\n";
    for (Variant v : {Variant::R, Variant::S, Variant::T}) {
      for (long r = 1; r <= w - 2; ++r) {
        for (long s = 1; r + s <= w - 1; ++s) {
          const long t = w - r - s;
          const EvaluationResult res = tornheim_closed(r, s, t, v);
          if (c.as_json()) {
            json row = res;
            row["series"] = to_string(v);
            row["r"] = r;
            row["s"] = s;
            row["t"] = t;
            rows.push_back(std::move(row));
          } else {
            out << "  " << to_string(v) << "(" << r << "," << s << "," << t << ") = " << res.expression.to_string()
                << "\n";
          }
        }
      }
    }
  }
  if (c.as_json()) out << rows.dump(2) << "\n";
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tornheim double series: exact closed forms, q-analogs and identity checks", "tornheim"};
  app.require_subcommand(1);

  Common eval_c, reduce_c, verify_c, table_c;
  std::string eval_series, reduce_series;
  std::vector<std::string> eval_args, reduce_args;
  bool classical = false;
  VerifyOptions vo;
  long max_weight = 9;

  auto* eval = app.add_subcommand("eval", "Evaluate T, S, R, zeta2 or qzeta");
  eval->add_option("series", eval_series, "T, S, R, zeta2 or qzeta")->required();
  eval->add_option("args", eval_args, "r s t | s1 s2 | s (bar(k) marks a minus sign)")->required();
  add_common(eval, eval_c, true);

  auto* reduce = app.add_subcommand("reduce", "Print the reduction of T, S, R (or a TT, SS, TS product)");
  reduce->add_option("series", reduce_series, "T, S, R, TT, SS or TS")->required();
  reduce->add_option("args", reduce_args, "r s t (or r s for products)")->required();
  reduce->add_flag("--classical", classical, "The q -> 1 reduction to double Euler sums");
  add_common(reduce, reduce_c, false);

  auto* verify = app.add_subcommand("verify", "Check an identity family case by case");
  verify->add_option("family", vo.family, "lemma1, theorem1, corollary1, corollary2, table or expression")->required();
  verify->add_option("args", vo.args, "for expression: series r s t");
  verify->add_option("--max", vo.max, "Upper end of the index sweep");
  verify->add_flag("--serial", vo.serial, "Run cases one after another");
  verify->add_option("--convention", vo.convention, "zeta(0;-1): analytic (-1/2) or flipped (+1/2)")
      ->check(CLI::IsMember({"analytic", "flipped"}));
  verify->add_option("--expr", vo.expression, "Claimed closed form (text or JSON) for 'verify expression'");
  add_common(verify, verify_c, false);

  auto* table = app.add_subcommand("table", "List closed forms of R, S, T of odd weight");
  table->add_option("--max-weight", max_weight, "Largest weight (at most 15)")->capture_default_str();
  add_common(table, table_c, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*eval) return cmd_eval(eval_series, eval_args, eval_c, out);
    if (*reduce) return cmd_reduce(reduce_series, reduce_args, classical, reduce_c, out);
    if (*verify) return cmd_verify(vo, verify_c, out);
    if (*table) return cmd_table(max_weight, table_c, out, err);
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_precision;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad JSON: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace tornheim::cli
