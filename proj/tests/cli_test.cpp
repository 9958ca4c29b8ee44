#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "sdq/cli.hpp"
#include "sdq/invariants.hpp"

using namespace sdq;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("help and argument errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--help"}).out.find("sdq") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"invariant", "point:+"}).code == 2);  // missing required options
}

TEST_CASE("validate command") {
    CliRun ok = run({"validate", "atilde1:+,++"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("valid") != std::string::npos);
    CHECK(ok.out.find("dual-pair representative") != std::string::npos);

    CHECK(run({"validate", "nosuch:xx"}).code == 2);
}

TEST_CASE("invariant command") {
    CliRun jsd = run({"invariant", "point:+", "--class", "2", "--kind", "J", "--sd"});
    CHECK(jsd.code == 0);
    CHECK(jsd.out == "1 / (2*L + 2)\n");

    CliRun plain = run({"invariant", "point:+", "--class", "1", "--kind", "J"});
    CHECK(plain.code == 0);
    CHECK(plain.out == "1 / (L - 1)\n");

    CliRun chi = run({"invariant", "point:+", "--class", "3", "--kind", "chiJ", "--sd"});
    CHECK(chi.code == 0);
    CHECK(chi.out == "-1/4\n");

    CliRun at = run({"invariant", "point:+", "--class", "2", "--kind", "J", "--sd", "--at", "2"});
    CHECK(at.code == 0);
    CHECK(at.out == "1/6\n");

    CHECK(run({"invariant", "point:+", "--class", "2,1", "--kind", "J"}).code == 2);
    CHECK(run({"invariant", "point:+", "--class", "2", "--kind", "chiJ", "--at", "1"}).code == 2);
    CHECK(run({"invariant", "point:+", "--class", "1", "--kind", "J", "--at", "1"}).code == 2);
    CHECK(run({"invariant", "point:+", "--class", "2", "--kind", "nope"}).code == 2);
    CHECK(run({"invariant", "atilde1:+,++", "--stability", R"({"1":"1","2":"1"})", "--class",
               "1,1", "--kind", "J", "--sd"})
              .code == 2);
    CHECK(run({"invariant", "point:-", "--class", "3", "--kind", "J", "--sd"}).code == 2);
}

TEST_CASE("table command formats") {
    CliRun text = run({"table", "point:+", "--sd", "--max", "3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("# quiver point:+") != std::string::npos);
    CHECK(text.out.find("Jsd\tchiJsd\tDTsd") != std::string::npos);

    CliRun csv = run({"table", "point:+", "--sd", "--max", "3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("class,Jsd,chiJsd,DTsd\n", 0) == 0);
    CHECK(csv.out.find("2,1 / (2*L + 2),1/4,-1/4") != std::string::npos);

    // Classes with commas get quoted.
    CliRun pair = run({"table", "atilde1:+,++", "--sd", "--max", "2", "--format", "csv"});
    CHECK(pair.code == 0);
    CHECK(pair.out.find("\"1,1\"") != std::string::npos);

    CliRun loop = run({"table", "loop:2:+:+-", "--sd", "--kind", "chiJ", "--max", "2",
                       "--format", "csv"});
    CHECK(loop.code == 0);
    CHECK(loop.out.rfind("class,chiJsd[2^+_+-]\n", 0) == 0);
    CHECK(loop.out.find("2,3/4") != std::string::npos);

    CHECK(run({"table", "point:+", "--max", "2", "--format", "nope"}).code == 2);
}

TEST_CASE("table json round-trips through the expression parser") {
    CliRun first = run({"table", "point:+", "--sd", "--max", "3", "--format", "json"});
    REQUIRE(first.code == 0);
    CHECK(run({"table", "point:+", "--sd", "--max", "3", "--format", "json"}).out == first.out);

    nlohmann::json doc = nlohmann::json::parse(first.out);
    CHECK(doc["quiver"] == "point:+");
    REQUIRE(doc["rows"].size() == 4);  // zero class plus dimensions 1..3
    CHECK(doc["columns"][0] == "Jsd");
    CHECK(doc["rows"][2]["class"] == "2");

    InvariantEngine eng(builtin_quiver("point:+"));
    StabilityFunction t1 = StabilityFunction::trivial(1);
    for (size_t i = 1; i < doc["rows"].size(); ++i) {
        DimVector cls = class_from_string(doc["rows"][i]["class"].get<std::string>(), 1);
        RationalFunction jsd =
            RationalFunction::parse(doc["rows"][i]["values"][0].get<std::string>());
        CHECK(jsd == eng.Jsd(cls, t1));
        Rational chi = rational_from_string(doc["rows"][i]["values"][1].get<std::string>());
        CHECK(chi == eng.chiJsd(cls, t1));
    }
}

TEST_CASE("series command") {
    CliRun ok = run({"series", "atilde1:+,++", "--max", "4"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("match") != std::string::npos);
    CHECK(ok.out.find("MISMATCH") == std::string::npos);
    CHECK(ok.out.find("q^(1/2)") != std::string::npos);

    CliRun pt = run({"series", "point:-", "--max", "6"});
    CHECK(pt.code == 0);
    CHECK(pt.out.find("MISMATCH") == std::string::npos);

    CHECK(run({"series", "a2:+", "--max", "4"}).code == 2);
}

TEST_CASE("verify command") {
    CHECK(run({"verify", "lambda", "--cases", "5", "--seed", "3"}).code == 0);
    CHECK(run({"verify", "wallcross", "--cases", "10", "--seed", "11"}).code == 0);
    CHECK(run({"verify", "bernoulli"}).code == 0);
    CHECK(run({"verify", "nosuch"}).code == 2);
}

TEST_CASE("series expansion helper") {
    // (1 - L x^2)^{1/2}: coefficients 1, 0, -L/2, 0, -L^2/8.
    std::vector<SeriesFactor> sqrt_factor{
        {-RationalFunction::lefschetz(), 2, Rational(1, 2)}};
    auto coeffs = expand_series(sqrt_factor, 4);
    CHECK(coeffs[0] == RationalFunction(1));
    CHECK(coeffs[1].is_zero());
    CHECK(coeffs[2] == RationalFunction::parse("-L/2"));
    CHECK(coeffs[3].is_zero());
    CHECK(coeffs[4] == RationalFunction::parse("-L^2/8"));

    // Geometric factor (1 - x)^{-1} against a shifted one.
    std::vector<SeriesFactor> geom{{-RationalFunction(1), 1, Rational(-1)}};
    auto ones = expand_series(geom, 3);
    for (int k = 0; k <= 3; ++k) CHECK(ones[k] == RationalFunction(1));
}
