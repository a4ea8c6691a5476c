// Expression grammar and scenario catalog/loader.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <doctest.h>

#include "spincurv/errors.hpp"
#include "spincurv/expr.hpp"
#include "spincurv/scenario.hpp"

using namespace spincurv;

namespace {

const std::array<std::string, 4> kNames{"t", "r", "th", "ph"};

double eval_at(const std::string& text, double t, double r, double th,
               double ph) {
    auto f = compile_expression(text, kNames);
    std::array<Jet, kDim> x{
        Jet::coordinate(t, 0, 1), Jet::coordinate(r, 1, 1),
        Jet::coordinate(th, 2, 1), Jet::coordinate(ph, 3, 1)};
    return f(x).value().real();
}

}  // namespace

TEST_CASE("expression grammar evaluates standard forms") {
    CHECK(eval_at("1 - 2/r", 0, 4, 0, 0) == doctest::Approx(0.5));
    CHECK(eval_at("-r^2 * sin(th)^2", 0, 2, M_PI / 6, 0) ==
          doctest::Approx(-1.0));
    CHECK(eval_at("2^3^2", 0, 1, 0, 0) == doctest::Approx(512.0));  // right-assoc
    CHECK(eval_at("exp(log(7.5))", 0, 1, 0, 0) == doctest::Approx(7.5));
    CHECK(eval_at("pow(r, 1.5)", 0, 4, 0, 0) == doctest::Approx(8.0));
    CHECK(eval_at("pi - 2*e", 0, 1, 0, 0) ==
          doctest::Approx(M_PI - 2 * M_E));
    CHECK(eval_at("cos(th) + tan(ph)", 0, 0, 0.5, 0.3) ==
          doctest::Approx(std::cos(0.5) + std::tan(0.3)));
    CHECK(eval_at(" - ( t + 1 ) * ( t - 1 ) ", 3, 0, 0, 0) ==
          doctest::Approx(-8.0));
}

TEST_CASE("expression derivatives are exact") {
    auto f = compile_expression("sqrt(r) * sin(th)", kNames);
    std::array<Jet, kDim> x{
        Jet::coordinate(0, 0, 2), Jet::coordinate(4, 1, 2),
        Jet::coordinate(0.7, 2, 2), Jet::coordinate(0, 3, 2)};
    Jet j = f(x);
    CHECK(std::abs(j.d1(1) - 0.25 * std::sin(0.7)) < 1e-14);
    CHECK(std::abs(j.d2(1, 2) - 0.25 * std::cos(0.7)) < 1e-14);
}

TEST_CASE("malformed expressions raise configuration errors") {
    CHECK_THROWS_AS(compile_expression("1 +", kNames), ConfigError);
    CHECK_THROWS_AS(compile_expression("bogus(r)", kNames), ConfigError);
    CHECK_THROWS_AS(compile_expression("x + 1", kNames), ConfigError);
    CHECK_THROWS_AS(compile_expression("sin r", kNames), ConfigError);
    CHECK_THROWS_AS(compile_expression("(r", kNames), ConfigError);
    CHECK_THROWS_AS(compile_expression("pow(r)", kNames), ConfigError);
}

TEST_CASE("catalog scenarios validate and carry expected metadata") {
    for (const std::string& name : catalog_names()) {
        SpacetimeScenario s = catalog_get(name);
        CHECK(s.name == name);
        CHECK(s.gauges.size() == 3);
    }
    CHECK(catalog_get("de_sitter(0.3)").lambda == doctest::Approx(0.3));
    CHECK(catalog_get("frw_conformal").vacuum == false);
    CHECK(catalog_get("pp_wave").vacuum == true);
    CHECK_THROWS_AS(catalog_get("nonexistent"), UsageError);
    CHECK_THROWS_AS(catalog_get("schwarzschild(-1)"), UsageError);
    CHECK_THROWS_AS(catalog_get("schwarzschild(abc)"), UsageError);
}

TEST_CASE("coulomb scenario carries the 1/r potential") {
    SpacetimeScenario s = catalog_get("coulomb_flat(0.5)");
    auto x = seed_jets({{0.0, 2.0, 1.0, 0.5}}, 2);
    CHECK(s.potential[0](x).value().real() == doctest::Approx(0.25));
    CHECK(s.potential[0](x).d1(1).real() == doctest::Approx(-0.125));
    CHECK(s.potential[1](x).value().real() == doctest::Approx(0.0));
}

TEST_CASE("scenario files load with defaults and validate") {
    const char* path = "test_scenario_tmp.json";
    {
        std::ofstream out(path);
        out << R"({
          "name": "flat_from_file",
          "chart": {"names": ["t","x","y","z"],
                    "region": [[-1,1],[-1,1],[-1,1],[-1,1]]},
          "metric": [["1","0","0","0"],["0","-1","0","0"],
                     ["0","0","-1","0"],["0","0","0","-1"]],
          "tetrad": [["1","0","0","0"],["0","1","0","0"],
                     ["0","0","1","0"],["0","0","0","1"]],
          "gamma": {"abs": "1 + 0.1*x", "phase": "0.2*y"},
          "probes": {"count": 7, "seed": 99}
        })";
    }
    SpacetimeScenario s = load_scenario(path);
    CHECK(s.name == "flat_from_file");
    CHECK(s.probe_count == 7);
    CHECK(s.probe_seed == 99);
    CHECK(s.lambda == 0.0);
    CHECK(s.vacuum == true);
    CHECK(s.gauges.size() == 3);  // defaults appended
    auto x = seed_jets({{0.0, 0.5, 0.0, 0.0}}, 1);
    CHECK(s.gamma_abs(x).value().real() == doctest::Approx(1.05));
    std::remove(path);
}

TEST_CASE("inconsistent scenario files are rejected") {
    const char* path = "test_scenario_bad.json";
    {
        std::ofstream out(path);
        // Tetrad does not reproduce the (inverse of the) stated metric.
        out << R"({
          "name": "broken",
          "chart": {"names": ["t","x","y","z"],
                    "region": [[-1,1],[-1,1],[-1,1],[-1,1]]},
          "metric": [["1","0","0","0"],["0","-1","0","0"],
                     ["0","0","-1","0"],["0","0","0","-1"]],
          "tetrad": [["2","0","0","0"],["0","1","0","0"],
                     ["0","0","1","0"],["0","0","0","1"]]
        })";
    }
    CHECK_THROWS_AS(load_scenario(path), ConfigError);
    std::remove(path);
    CHECK_THROWS_AS(load_scenario("no_such_file.json"), ConfigError);
}
