#include "spincurv/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace spincurv {

namespace {

// Fixed-format residual rendering so every emitter (and every run) prints
// identical bytes for identical numbers.
std::string num(double v) {
    if (std::isinf(v)) return "inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

int SuiteReport::passed() const {
    int n = 0;
    for (const CheckResult& c : checks) n += c.pass ? 1 : 0;
    return n;
}

int SuiteReport::failed() const {
    return static_cast<int>(checks.size()) - passed();
}

std::string to_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << " | scenario " << r.scenario
       << " | formalism " << r.formalism << " | seed " << r.seed << "\n";
    for (const CheckResult& c : r.checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.check_id
           << "  residual=" << num(c.residual) << "  tol=" << num(c.tolerance)
           << "  (" << c.tag << ")";
        if (!c.error.empty()) os << "  error: " << c.error;
        os << "\n";
    }
    os << r.passed() << " passed, " << r.failed() << " failed, "
       << r.checks.size() << " total\n";
    return os.str();
}

std::string to_json(const SuiteReport& r) {
    nlohmann::json j;
    j["scenario"] = r.scenario;
    j["suite"] = r.suite;
    j["formalism"] = r.formalism;
    j["seed"] = r.seed;
    j["tol_scale"] = r.tol_scale;
    j["passed"] = r.passed();
    j["failed"] = r.failed();
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        nlohmann::json e;
        e["check_id"] = c.check_id;
        e["paper_ref"] = c.tag;
        e["residual"] = num(c.residual);
        e["tolerance"] = num(c.tolerance);
        e["pass"] = c.pass;
        if (!c.error.empty()) e["error"] = c.error;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string to_csv(const SuiteReport& r) {
    std::ostringstream os;
    os << "check_id,paper_ref,residual,tolerance,pass\n";
    for (const CheckResult& c : r.checks)
        os << csv_quote(c.check_id) << ',' << csv_quote(c.tag) << ','
           << num(c.residual) << ',' << num(c.tolerance) << ','
           << (c.pass ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace spincurv
