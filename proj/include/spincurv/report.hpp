// spincurv — check results and report serialization (text / JSON / CSV).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spincurv {

struct CheckResult {
    std::string check_id;   // e.g. "curvature.riemann-roundtrip.gamma"
    std::string tag;        // human-readable statement of the check
    double residual = 0;    // infinity if the evaluation threw
    double tolerance = 0;
    bool pass = false;
    std::string error;      // diagnostic when the evaluation threw
};

struct SuiteReport {
    std::string scenario;
    std::string suite;
    std::string formalism;  // "gamma" | "epsilon" | "both"
    std::uint64_t seed = 0;
    double tol_scale = 1.0;
    std::vector<CheckResult> checks;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
};

// One line per check plus a summary footer.
std::string to_text(const SuiteReport& r);
// Deterministic JSON (sorted keys, fixed layout): byte-identical for
// identical scenario + seed + options.
std::string to_json(const SuiteReport& r);
// Header "check_id,paper_ref,residual,tolerance,pass"; the paper_ref column
// carries the descriptive tag of each check.
std::string to_csv(const SuiteReport& r);

}  // namespace spincurv
