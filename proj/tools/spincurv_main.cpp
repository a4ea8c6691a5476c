// spincurv command-line driver: runs check suites over a scenario and emits
// text/JSON/CSV reports. Exit codes: 0 all checks pass, 1 at least one check
// failed, 2 configuration or usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "spincurv/errors.hpp"
#include "spincurv/suites.hpp"

namespace {

spincurv::SpacetimeScenario resolve_scenario(const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0)
        return spincurv::catalog_get(arg.substr(8));
    return spincurv::load_scenario(arg);
}

std::uint64_t seed_from_env() {
    const char* env = std::getenv("SPINCURV_SEED");
    if (!env || !*env) return 1;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw spincurv::ConfigError(
            std::string("SPINCURV_SEED is not an unsigned integer: ") + env);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "spincurv: two-component spinor geometry checks at probe points"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a check suite on a scenario");
    std::string scenario_arg, suite = "all", formalism = "both";
    std::string out_path, format = "text";
    double tol_scale = 1.0;
    run->add_option("--scenario", scenario_arg,
                    "scenario JSON file, or catalog:<name>")
        ->required();
    run->add_option("--suite", suite,
                    "algebra|connection|curvature|gauge|wave|limit|all");
    run->add_option("--formalism", formalism, "gamma|epsilon|both");
    run->add_option("--out", out_path, "write the report here (default stdout)");
    run->add_option("--format", format, "text|json|csv");
    run->add_option("--tol-scale", tol_scale,
                    "multiply every tolerance by this factor");

    auto* list = app.add_subcommand("list", "list catalog scenarios and suites");

    auto* check = app.add_subcommand("check-file",
                                     "parse and validate a scenario file");
    std::string check_path;
    check->add_option("file", check_path, "scenario JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            std::cout << "catalog scenarios:\n";
            for (const std::string& n : spincurv::catalog_names())
                std::cout << "  " << n << "\n";
            std::cout << "suites:\n";
            for (const std::string& n : spincurv::suite_names())
                std::cout << "  " << n << "\n";
            return 0;
        }

        if (check->parsed()) {
            spincurv::SpacetimeScenario s = spincurv::load_scenario(check_path);
            std::cout << "ok: scenario \"" << s.name << "\" (vacuum="
                      << (s.vacuum ? "true" : "false")
                      << ", lambda=" << s.lambda << ")\n";
            return 0;
        }

        // run
        if (format != "text" && format != "json" && format != "csv")
            throw spincurv::ConfigError("unknown format: " + format);
        spincurv::SpacetimeScenario s = resolve_scenario(scenario_arg);
        spincurv::SuiteOptions opt;
        opt.suite = suite;
        opt.formalism = formalism;
        opt.tol_scale = tol_scale;
        opt.seed = seed_from_env();
        spincurv::SuiteReport rep = spincurv::run_suite(s, opt);

        std::string body = format == "json"  ? spincurv::to_json(rep)
                           : format == "csv" ? spincurv::to_csv(rep)
                                             : spincurv::to_text(rep);
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out)
                throw spincurv::ConfigError("cannot write: " + out_path);
            out << body;
        }
        return rep.all_pass() ? 0 : 1;
    } catch (const spincurv::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const spincurv::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
