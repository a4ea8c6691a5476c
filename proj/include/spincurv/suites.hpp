// spincurv — named check suites over a scenario: each suite evaluates a set
// of identities/residuals at deterministic probe points and returns a report.

#pragma once

#include "spincurv/report.hpp"
#include "spincurv/scenario.hpp"
#include "spincurv/spinor_field.hpp"

namespace spincurv {

struct SuiteOptions {
    std::string suite = "all";       // see suite_names()
    std::string formalism = "both";  // "gamma" | "epsilon" | "both"
    double tol_scale = 1.0;          // multiplies every tolerance
    std::uint64_t seed = 1;          // probe/random seed
};

// {"algebra", "connection", "curvature", "gauge", "wave", "limit", "all"}
const std::vector<std::string>& suite_names();

// Runs the requested suite(s). Evaluation errors are collected per check
// (reported as failed with the diagnostic), never thrown. Throws UsageError
// for an unknown suite or formalism name.
SuiteReport run_suite(const SpacetimeScenario& s, const SuiteOptions& opt);

}  // namespace spincurv
