#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "lextrop/cli.hpp"
#include "lextrop/parser.hpp"
#include "lextrop/render.hpp"
#include "test_support.hpp"

using namespace lextrop;
using namespace lextrop::testsupport;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tower grammar") {
    FieldTower t = parse_tower("QQ((t1))((t2))");
    CHECK(t.height() == 2);
    CHECK(t.base().kind() == BaseField::Kind::rationals);
    CHECK(t.uniformizer_names() == std::vector<std::string>{"t1", "t2"});

    FieldTower g = parse_tower("GF(7)((t))");
    CHECK(g.base().characteristic() == 7);
    CHECK(g.height() == 1);

    CHECK(parse_tower("QQ").height() == 0);
    CHECK_THROWS_AS(parse_tower("ZZ((t))"), ParseError);
    CHECK_THROWS_AS(parse_tower("QQ((t1)"), ParseError);
    CHECK_THROWS_AS(parse_tower("GF(8)((t))"), std::invalid_argument);
}

TEST_CASE("polynomial grammar round trips and reports positions") {
    FieldTower t = make_tower(2);
    auto vars = make_vars(2);

    KPolynomial f = parse_polynomial("x + y + 1", t, vars);
    CHECK(f.term_count() == 3);

    // expansion matches the ring arithmetic
    KPolynomial g = parse_polynomial("(x - t1)*(x - t1^2) + y^2", t, vars);
    KPolynomial x = KPolynomial::monomial(t, vars, FieldElement::one(t), {1, 0});
    KPolynomial t1 = KPolynomial::constant(t, vars,
                                           FieldElement::monomial(t, 1, {Rational(1), Rational(0)}));
    KPolynomial t1sq = KPolynomial::constant(t, vars,
                                             FieldElement::monomial(t, 1, {Rational(2), Rational(0)}));
    KPolynomial y = KPolynomial::monomial(t, vars, FieldElement::one(t), {0, 1});
    CHECK(g == (x - t1) * (x - t1sq) + y * y);
    CHECK(g.term_count() == 4);

    try {
        parse_polynomial("x + w", t, vars);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
        CHECK(std::string(e.what()).find("unknown symbol 'w'") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_polynomial("x ^ y", t, vars), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^(1/2)", t, vars), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x + 1)^-1", t, vars), ParseError);
    // fractional uniformizer exponents ramify instead of failing
    CHECK(parse_polynomial("t1^(1/2)*x", t, vars).term_count() == 1);
}

TEST_CASE("parse-render round trip on random polynomials") {
    std::mt19937_64 rng(89);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 1 + static_cast<int>(draw(rng, 0, 2));
        int m = 1 + static_cast<int>(draw(rng, 0, 2));
        FieldTower t = make_tower(n);
        KPolynomial f = random_kpoly(rng, t, m);
        KPolynomial g = parse_polynomial(f.str(), t, make_vars(m));
        CHECK(f == g);
    }
}

TEST_CASE("variable inference recognizes the default names in canonical order") {
    FieldTower t = make_tower(2);
    CHECK(infer_variables("y + x + 1", t) == std::vector<std::string>{"x", "y"});
    CHECK(infer_variables("z^2 + t1", t) == std::vector<std::string>{"z"});
    CHECK(infer_variables("t1 + t2", t) == std::vector<std::string>{"x"});
    CHECK_THROWS_AS(infer_variables("x + w", t), ParseError);
}

TEST_CASE("weight grammar") {
    WeightMatrix w = parse_weight("1,0;1/2,0", 2, 2);
    CHECK(w.entry(0) == LexValue({Rational(1), Rational(0)}));
    CHECK(w.entry(1) == LexValue({Rational(1, 2), Rational(0)}));
    CHECK(w.str() == "1,0;1/2,0");
    CHECK_THROWS_AS(parse_weight("1,0", 2, 2), ParseError);
    CHECK_THROWS_AS(parse_weight("1;2", 2, 2), ParseError);
    CHECK_THROWS_AS(parse_weight("1,x;0,0", 2, 2), ParseError);
}

TEST_CASE("member command") {
    auto member = run({"member", "--weight", "0,0;0,0", "x + y + 1"});
    CHECK(member.code == exit_ok);
    CHECK(member.out == "member\n");

    auto non = run({"member", "--weight", "-1,-1;0,0", "x + y + 1"});
    CHECK(non.code == exit_ok);
    CHECK(non.out == "not member (initial form = x)\n");

    // the paper-minus convention flips the weight sign
    auto minus = run({"member", "--weight", "1,1;0,0", "--convention", "paper-minus",
                      "x + y + 1"});
    CHECK(minus.out == "not member (initial form = x)\n");
}

TEST_CASE("witness and eval commands") {
    auto w = run({"witness", "--weight", "0,0;0,0", "x + y + 1"});
    CHECK(w.code == exit_ok);
    CHECK(w.out.find("b = (1, 2)") != std::string::npos);
    CHECK(w.out.find("multiplicity 2") != std::string::npos);

    auto guard = run({"witness", "--weight", "1,0", "x + 1"});
    CHECK(guard.code == exit_failure);
    CHECK(guard.err.find("not in the tropicalization") != std::string::npos);

    auto e = run({"eval", "--weight", "1,1;0,0", "x + y + 1"});
    CHECK(e.code == exit_ok);
    CHECK(e.out == "value = (0, 0)\nachievers: 1, y\n");
}

TEST_CASE("newton command") {
    auto r = run({"newton", "--vars", "z", "(1 - t1^-1*z)*(1 - t1^-2*z)"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "root valuations: (2, 0) x1, (1, 0) x1\n");

    auto plot = run({"newton", "--vars", "z", "--output", "plot-data",
                     "(1 - t1^-1*z)*(1 - t1^-2*z)"});
    CHECK(plot.code == exit_ok);
    CHECK(plot.out.find("point 0 0 0 0") != std::string::npos);
    CHECK(plot.out.find("edge 0 1") != std::string::npos);

    auto bad = run({"newton", "x + y"});
    CHECK(bad.code == exit_failure);
}

TEST_CASE("trop command modes and exit codes") {
    auto text = run({"trop", "x + y + 1"});
    CHECK(text.code == exit_ok);
    CHECK(text.out.find("flattened dimension: 2 (expected 2)") != std::string::npos);
    CHECK(text.out.find("pure: yes") != std::string::npos);

    auto json_run = run({"trop", "--output", "json", "x + y + 1"});
    CHECK(json_run.code == exit_ok);
    nlohmann::json j = nlohmann::json::parse(json_run.out);
    CHECK(j["dim"] == 2);
    CHECK(j["expected_dim"] == 2);
    CHECK(j["pure"] == true);
    CHECK(j["convention"] == "plus");
    CHECK(j["flattened"]["cells"].size() == 7);
    CHECK(j["fibered"]["cells"].size() == 4);

    auto impure = run({"trop", "(x - t1)*(x - t1^2) + y^2"});
    CHECK(impure.code == exit_ok);
    CHECK(impure.out.find("pure: no") != std::string::npos);
    CHECK(impure.out.find("below the expected dimension") != std::string::npos);

    auto monomial = run({"trop", "x"});
    CHECK(monomial.code == exit_ok);
    CHECK(monomial.err.find("monomial input") != std::string::npos);

    auto parse_fail = run({"trop", "x + w"});
    CHECK(parse_fail.code == exit_parse_error);
    CHECK(parse_fail.err.find("unknown symbol") != std::string::npos);

    auto budget = run({"trop", "--max-cells", "2", "x + y + 1"});
    CHECK(budget.code == exit_failure);
}

TEST_CASE("table command matches the known degenerations") {
    auto r = run({"table", "x + y + 1"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("w12 = w22 = 0, w11 = w21 = 0") != std::string::npos);
    CHECK(r.out.find("| x + y + 1") != std::string::npos);
    CHECK(r.out.find("w12 = w22 < 0") != std::string::npos);
    CHECK(r.out.find("t1^w11*x + t1^w21*y + 1") != std::string::npos);

    auto impure = run({"table", "(x - t1)*(x - t1^2) + y^2"});
    CHECK(impure.code == exit_ok);
    CHECK(impure.out.find("1 < w11 < 2, w21 = w11/2 + 1/2") != std::string::npos);

    auto binomial = run({"table", "x + 1", "--tower", "QQ((t1))((t2))"});
    CHECK(binomial.code == exit_ok);
    CHECK(binomial.out.find("w12 = 0") != std::string::npos);
    CHECK(binomial.out.find("w11 = 0") != std::string::npos);

    auto json_rows = run({"table", "--output", "json", "x + y + 1"});
    nlohmann::json j = nlohmann::json::parse(json_rows.out);
    CHECK(j.size() == 11);
}

TEST_CASE("output is byte-identical across repeated runs") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"trop", "--output", "json", "(x - t1)*(x - t1^2) + y^2"},
             {"table", "x + y + 1"},
             {"trop", "--output", "plot-data", "x + y + 1", "--tower", "QQ((t))"}}) {
        auto a = run(args);
        auto b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("plot data for the rank-1 tripod") {
    auto r = run({"trop", "--output", "plot-data", "--tower", "QQ((t))", "x + y + 1"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("vertex 0 0 0") != std::string::npos);
    CHECK(r.out.find("ray 0 1 0") != std::string::npos);
    CHECK(r.out.find("ray 0 0 1") != std::string::npos);
    CHECK(r.out.find("ray 0 -1 -1") != std::string::npos);

    auto r4 = run({"trop", "--output", "plot-data", "x + y + 1"});
    CHECK(r4.code == exit_ok);
    CHECK(r4.out.find("# projection w11 w21") != std::string::npos);
}

TEST_CASE("paper-minus convention mirrors the reported geometry") {
    auto plus = run({"table", "x + 1", "--tower", "QQ((t1))"});
    auto minus = run({"table", "x + 1", "--tower", "QQ((t1))", "--convention", "paper-minus"});
    // the binomial point is symmetric, so both describe w11 = 0
    CHECK(plus.out.find("w11 = 0") != std::string::npos);
    CHECK(minus.out.find("w11 = 0") != std::string::npos);

    auto plus_ray = run({"trop", "x + t1", "--tower", "QQ((t1))", "--output", "json"});
    auto minus_ray = run({"trop", "x + t1", "--tower", "QQ((t1))", "--output", "json",
                          "--convention", "paper-minus"});
    nlohmann::json jp = nlohmann::json::parse(plus_ray.out);
    nlohmann::json jm = nlohmann::json::parse(minus_ray.out);
    CHECK(jp["convention"] == "plus");
    CHECK(jm["convention"] == "paper-minus");
    // x + t1 over QQ((t1)): the tie is at w11 = 1, reflected to -1
    CHECK(jp["fibered"]["cells"][0]["condition"] == "w11 = 1");
    CHECK(jm["fibered"]["cells"][0]["condition"] == "w11 = -1");
}

TEST_CASE("usage errors") {
    auto missing = run({"member", "x + y"});
    CHECK(missing.code != exit_ok);
    auto unknown = run({"frobnicate", "x"});
    CHECK(unknown.code != exit_ok);

    // torus variables must stay disjoint from the uniformizers
    auto clash = run({"trop", "--vars", "t1", "t1 + 1"});
    CHECK(clash.code == exit_failure);

    // the zero polynomial warns at parse time and fails the computation
    auto zero = run({"trop", "x - x"});
    CHECK(zero.code == exit_failure);
    CHECK(zero.err.find("warning: zero polynomial") != std::string::npos);
}

TEST_CASE("ramified and prime-field towers work end to end") {
    auto frac = run({"trop", "x^2 + t1", "--tower", "QQ((t1))"});
    CHECK(frac.code == exit_ok);
    CHECK(frac.out.find("w11 = 1/2") != std::string::npos);

    auto gf = run({"trop", "--tower", "GF(7)((t1))((t2))", "x + y + 1"});
    CHECK(gf.code == exit_ok);
    CHECK(gf.out.find("flattened dimension: 2 (expected 2)") != std::string::npos);

    auto input_frac = run({"newton", "--vars", "z", "--tower", "QQ((t1))",
                           "1 + t1^(1/2)*z"});
    CHECK(input_frac.code == exit_ok);
    CHECK(input_frac.out.find("(-1/2) x1") != std::string::npos);
}
