#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tornheim/cli.hpp"
#include "tornheim/closed_form.hpp"
#include "tornheim/reduction.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

using namespace tornheim;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval prints the closed form and its value") {
  const Outcome o = run({"eval", "R", "1", "1", "1"});
  CHECK(o.code == cli::exit_ok);
  CHECK(contains(o.out, "R(1,1,1) = -(5/8)*zeta(3) ≈ -0.751285564474746"));
  CHECK(contains(o.out, "error bound"));
}

TEST_CASE("eval of a q-analog reports its tail bound") {
  const Outcome o = run({"eval", "T", "2", "1", "2", "--q", "2", "--digits", "30"});
  CHECK(o.code == cli::exit_ok);
  CHECK(contains(o.out, "at q=2"));
  CHECK(contains(o.out, "error bound: 10^-"));

  const Outcome j = run({"eval", "T", "2", "1", "2", "--q", "2", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["digits"] == 30);
  CHECK(doc["bound_log10"].get<double>() <= -35);
  CHECK(doc["value"].get<std::string>().size() >= 31);
}

TEST_CASE("eval rejects a divergent series") {
  const Outcome o = run({"eval", "T", "1", "1", "0"});
  CHECK(o.code == cli::exit_usage);
  CHECK(contains(o.err, "s+t>1 violated"));
}

TEST_CASE("eval of even weight is numeric only") {
  const Outcome o = run({"eval", "R", "1", "1", "2"});
  CHECK(o.code == cli::exit_ok);
  CHECK(contains(o.out, "no closed form, numeric only"));
}

TEST_CASE("eval with explicit signs") {
  const Outcome a = run({"eval", "T", "2", "1", "1", "--signs=+-"});
  const Outcome b = run({"eval", "R", "2", "1", "1"});
  CHECK(a.code == cli::exit_ok);
  CHECK(a.out == b.out);
  const Outcome c = run({"eval", "T", "1", "2", "1", "--signs=-+"});
  CHECK(c.out == b.out);
  CHECK(run({"eval", "T", "1", "2", "1", "--signs=x+"}).code == cli::exit_usage);
}

TEST_CASE("eval of double Euler sums and q-zeta") {
  const Outcome z = run({"eval", "zeta2", "2", "1"});
  CHECK(z.code == cli::exit_ok);
  CHECK(contains(z.out, "= zeta(3) ≈ 1.20205690315959"));
  CHECK(run({"eval", "zeta2", "bar(2)", "bar(1)"}).code == cli::exit_ok);
  const Outcome q = run({"eval", "qzeta", "2", "--q", "2"});
  CHECK(contains(q.out, "2.74403388875948"));
  CHECK(run({"eval", "qzeta", "2"}).code == cli::exit_usage);
  CHECK(run({"eval", "T", "2", "1", "2", "--q", "1"}).code == cli::exit_usage);
}

TEST_CASE("eval json round-trips the closed form") {
  const Outcome o = run({"eval", "R", "2", "1", "2", "--format", "json"});
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["closed_form"].get<EvaluationResult>() == tornheim_closed(2, 1, 2, Variant::R));
}

TEST_CASE("reduce prints the three families") {
  const Outcome o = run({"reduce", "R", "1", "1", "1", "--q", "2"});
  CHECK(o.code == cli::exit_ok);
  CHECK(contains(o.out, "zeta_q[bar(2), bar(1)]"));
  CHECK(contains(o.out, "zeta_{q^2}[2]"));
  CHECK(contains(o.out, "|difference|"));

  const Outcome j = run({"reduce", "S", "3", "2", "1/2", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out).get<Reduction>() == theorem1_reduce(3, 2, Rational(1, 2), Variant::S));

  const Outcome c = run({"reduce", "T", "1", "1", "1", "--classical"});
  CHECK(contains(c.out, "zeta(2, 1)"));

  const Outcome p = run({"reduce", "TS", "2", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(p.out).get<Reduction>() == product_decompose(2, 1, ProductVariant::TS));
}

TEST_CASE("verify families") {
  const Outcome lemma = run({"verify", "lemma1", "--max", "2"});
  CHECK(lemma.code == cli::exit_ok);
  CHECK(contains(lemma.out, "summary lemma1:"));
  CHECK(contains(lemma.out, " 0 failed"));

  const Outcome table = run({"verify", "table"});
  CHECK(table.code == cli::exit_ok);
  CHECK(contains(table.out, "12 passed, 0 failed"));

  const Outcome flipped = run({"verify", "table", "--convention", "flipped"});
  CHECK(flipped.code == cli::exit_verify_failed);

  const Outcome t1 = run({"verify", "theorem1", "--max", "2", "--q", "2", "--serial"});
  CHECK(t1.code == cli::exit_ok);
  CHECK_FALSE(contains(t1.out, "FAIL"));

  CHECK(run({"verify", "nonsense"}).code == cli::exit_usage);
}

TEST_CASE("verify a supplied expression") {
  const std::string good = "-(5/16)*pi^2*zeta(3) + (107/32)*zeta(5)";
  CHECK(run({"verify", "expression", "R", "2", "1", "2", "--expr", good}).code == cli::exit_ok);
  CHECK(run({"verify", "expression", "R", "2", "1", "2", "--expr", "(5/16)*pi^2*zeta(3) + (107/32)*zeta(5)"}).code ==
        cli::exit_verify_failed);
  const std::string as_json = nlohmann::json(tornheim_closed(2, 1, 2, Variant::R).expression).dump();
  CHECK(run({"verify", "expression", "R", "2", "1", "2", "--expr", as_json}).code == cli::exit_ok);
  CHECK(run({"verify", "expression", "R", "2", "1", "2", "--expr", "[{"}).code == cli::exit_usage);
}

TEST_CASE("table") {
  const Outcome w3 = run({"table", "--max-weight", "3"});
  CHECK(w3.code == cli::exit_ok);
  CHECK(contains(w3.out, "R(1,1,1) = -(5/8)*zeta(3)"));

  const Outcome w5 = run({"table", "--max-weight", "5"});
  for (const char* name : {"R(1,1,3)", "R(1,2,2)", "R(1,3,1)", "R(2,1,2)", "R(2,2,1)", "R(3,1,1)"}) {
    CHECK(contains(w5.out, name));
  }

  const Outcome json = run({"table", "--max-weight", "5", "--format", "json"});
  for (const auto& row : nlohmann::json::parse(json.out)) {
    const auto res = row.get<EvaluationResult>();
    const Variant v = parse_variant(row["series"].get<std::string>());
    CHECK(res == tornheim_closed(row["r"], row["s"], row["t"], v));
  }

  const Outcome refused = run({"table", "--max-weight", "17"});
  CHECK(refused.code == cli::exit_usage);
  CHECK(contains(refused.err, "refusing"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::exit_usage);
  CHECK(run({"eval"}).code == cli::exit_usage);
  CHECK(run({"eval", "T", "1", "1"}).code == cli::exit_usage);
  CHECK(run({"eval", "Q", "1", "1", "1"}).code == cli::exit_usage);
  CHECK(run({"eval", "T", "2", "1", "2", "--digits", "5"}).code == cli::exit_usage);
  CHECK(run({"--help"}).code == cli::exit_ok);
}

TEST_CASE("precision failures have their own exit code") {
  const Outcome o = run({"eval", "T", "2", "1", "2", "--q", "1000001/1000000", "--digits", "30"});
  CHECK(o.code == cli::exit_precision);
}
