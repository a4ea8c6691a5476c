// spincurv — analytic spacetime scenarios: metric + tetrad + metric-spinor
// function + electromagnetic potential + gauge elements, as jet-evaluable
// chart functions. Catalog of exact solutions plus a JSON file loader.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spincurv/chart.hpp"

namespace spincurv {

// A Weyl gauge element: rho(x) > 0 and a real phase Lambda(x); the group
// element is sqrt(rho) e^{i Lambda} times the unit matrix on spin space.
struct GaugeSpec {
    std::string label;
    ScalarFn rho;
    ScalarFn lambda;
};

struct SpacetimeScenario {
    std::string name;
    Chart chart;

    // g_ab, row-major; must be symmetric and of signature (+---).
    std::array<std::array<ScalarFn, kDim>, kDim> metric;
    // Orthonormal tetrad e_mu^a: frame row mu, world column a.
    std::array<std::array<ScalarFn, kDim>, kDim> tetrad;

    // gamma(x) = |gamma| e^{i Phi} in polar pieces (both real-valued).
    ScalarFn gamma_abs;
    ScalarFn gamma_phase;

    // Electromagnetic potential Phi_a (real components); shared by both
    // formalisms, since the formalisms' potentials must coincide whenever
    // electromagnetic curvature is present.
    std::array<ScalarFn, kDim> potential;

    // Optional log |E| prescribing the real contracted part of the
    // epsilon-formalism affinity as a gradient, Pi_a = -d_a log|E|;
    // absent means Pi_a = 0.
    std::optional<ScalarFn> log_E;

    double lambda = 0.0;  // cosmological constant
    double kappa = 1.0;   // Einstein coupling
    bool vacuum = true;   // whether Einstein residual checks apply

    std::vector<GaugeSpec> gauges;

    int probe_count = 20;
    std::uint64_t probe_seed = 1;
};

// Catalog names: minkowski, schwarzschild, de_sitter, frw_conformal,
// pp_wave, coulomb_flat. A single numeric parameter may be given in
// parentheses, e.g. "schwarzschild(2.0)" (mass), "de_sitter(0.3)"
// (cosmological constant), "coulomb_flat(0.5)" (charge).
SpacetimeScenario catalog_get(const std::string& name);
std::vector<std::string> catalog_names();

// Loads a scenario from a JSON file; see the README for the schema.
// Throws ConfigError with diagnostic detail on parse or consistency errors.
SpacetimeScenario load_scenario(const std::string& path);

// Validation run at load/construction: tetrad reproduces the metric and the
// signature is (+---) at `count` sample points. Throws ConfigError.
void validate_scenario(const SpacetimeScenario& s, int count = 10);

// The standard three gauge elements used by covariance suites (identity,
// constant, coordinate-dependent), appended to any scenario-supplied ones.
std::vector<GaugeSpec> default_gauges();

}  // namespace spincurv
