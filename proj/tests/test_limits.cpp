// Cross-formalism correspondences: every quantity built with the gamma
// metric spinor maps to its epsilon-formalism counterpart through an explicit
// power of the metric-spinor function, and the gamma-formalism degenerates
// into the epsilon one at first order as (|gamma|, Phi) -> (1, 0).

#include <cmath>
#include <doctest.h>

#include "spincurv/curvature.hpp"
#include "spincurv/wave.hpp"

using namespace spincurv;

namespace {

struct FormPair {
    GeometryPoint Gg, Ge;
    CurvatureBundle Cg, Ce;
    Jet gamma;  // metric-spinor function at the point (gamma-form value)
};

FormPair make_pair(const SpacetimeScenario& s, const ProbePoint& p,
                   int order = 3) {
    FormPair f{make_geometry(s, p, Formalism::Gamma, order),
               make_geometry(s, p, Formalism::Epsilon, order),
               {},
               {},
               Jet()};
    f.Cg = make_curvature(f.Gg);
    f.Ce = make_curvature(f.Ge);
    f.gamma = f.Gg.gamma;
    return f;
}

// Lowered symmetric part of the spin affinity, slots (a, B, C).
SpinorField sym_affinity(const GeometryPoint& G) {
    SpinorField lo = adjust_index(G.aff, 2, IndexDirection::Lower, G.metric);
    return symmetrize(lo, {1, 2});
}

// Scenario with the metric-spinor data contracted toward (1, 0) by delta.
SpacetimeScenario shrunk(const SpacetimeScenario& s0, double delta) {
    SpacetimeScenario s = s0;
    ScalarFn abs0 = s0.gamma_abs, ph0 = s0.gamma_phase;
    s.gamma_abs = [abs0, delta](const std::array<Jet, kDim>& x) {
        return 1.0 + delta * (abs0(x) - 1.0);
    };
    s.gamma_phase = [ph0, delta](const std::array<Jet, kDim>& x) {
        return delta * ph0(x);
    };
    return s;
}

}  // namespace

TEST_CASE("finite correspondences between the two formalisms") {
    for (const char* name : {"schwarzschild(1.0)", "coulomb_flat(0.5)"}) {
        SpacetimeScenario s = catalog_get(name);
        ProbePoint p = make_probe_set(s.chart, 1, 47)[0];
        FormPair f = make_pair(s, p);
        const Jet& gm = f.gamma;
        Jet ab2 = abs_jet(gm) * abs_jet(gm);

        // symmetric affinity scales with the metric-spinor function
        CHECK(max_abs_diff(sym_affinity(f.Gg),
                           scale(sym_affinity(f.Ge), gm)) < 1e-10);

        // mixed spin curvature coincides; the lowered form picks up gamma
        CHECK(max_abs_diff(f.Cg.W, f.Ce.W) < 1e-9);
        CHECK(max_abs_diff(f.Cg.W_lo, scale(f.Ce.W_lo, gm)) < 1e-9);

        // curvature spinors: gamma^2 for the unprimed pair, |gamma|^2 for
        // the mixed pair, and scalar equality
        CHECK(max_abs_diff(f.Cg.omega, scale(f.Ce.omega, gm * gm)) < 1e-9);
        CHECK(max_abs_diff(f.Cg.omega_p, scale(f.Ce.omega_p, ab2)) < 1e-9);
        CHECK(std::abs(f.Cg.chi.value() - f.Ce.chi.value()) < 1e-10);
        // the electromagnetic spinor is a trace of omega, so one factor of
        // the metric-spinor function is removed by the inverse metric
        CHECK(max_abs_diff(f.Cg.phi_em, scale(f.Ce.phi_em, gm)) < 1e-9);

        // fully spinor-indexed Riemann tensor scales with |gamma|^4
        SpinorField rg = all_world_to_spin(f.Cg.riemann_lo, f.Gg.conn);
        SpinorField re = all_world_to_spin(f.Ce.riemann_lo, f.Ge.conn);
        CHECK(max_abs_diff(rg, scale(re, ab2 * ab2)) < 1e-9);

        // the scaling factors are genuinely nontrivial at this point
        CHECK(std::abs(gm.value() - 1.0) > 1e-2);
        CHECK(max_abs(f.Cg.W) > 1e-4);
    }
}

TEST_CASE("constant metric-spinor function: correspondence at |gamma| = 2") {
    SpacetimeScenario s = catalog_get("schwarzschild(1.0)");
    s.gamma_abs = [](const std::array<Jet, kDim>& x) {
        return Jet(x[0].order(), 2.0);
    };
    s.gamma_phase = [](const std::array<Jet, kDim>& x) {
        return Jet(x[0].order(), 0.3);
    };
    ProbePoint p = make_probe_set(s.chart, 1, 53)[0];
    FormPair f = make_pair(s, p);
    cplx gm = 2.0 * std::exp(cplx(0, 0.3));
    CHECK(std::abs(f.gamma.value() - gm) < 1e-14);
    CHECK(max_abs_diff(f.Cg.omega, scale(f.Ce.omega, gm * gm)) < 1e-9);
    CHECK(max_abs_diff(sym_affinity(f.Gg),
                       scale(sym_affinity(f.Ge), gm)) < 1e-10);
    CHECK(max_abs(f.Cg.omega) > 1e-3);
}

TEST_CASE("degeneration ladder: gamma-form tends to epsilon-form linearly") {
    SpacetimeScenario s0 = catalog_get("schwarzschild(1.0)");
    ProbePoint p = make_probe_set(s0.chart, 1, 59)[0];
    GeometryPoint Ge = make_geometry(s0, p, Formalism::Epsilon, 3);
    CurvatureBundle Ce = make_curvature(Ge);

    // at delta = 0 the formalisms agree exactly
    {
        GeometryPoint G0 =
            make_geometry(shrunk(s0, 0.0), p, Formalism::Gamma, 3);
        CurvatureBundle C0 = make_curvature(G0);
        CHECK(max_abs_diff(G0.aff, Ge.aff) < 1e-10);
        CHECK(max_abs_diff(G0.metric.lo, Ge.metric.lo) < 1e-12);
        CHECK(max_abs_diff(C0.omega, Ce.omega) < 1e-10);
        CHECK(max_abs_diff(C0.W_lo, Ce.W_lo) < 1e-10);
        for (int a = 0; a < kDim; ++a)
            CHECK(std::abs(G0.theta[a].value()) < 1e-12);
    }

    // across delta in {1e-1, 1e-2, 1e-3} the discrepancy shrinks at first
    // order or better
    std::array<double, 3> deltas{1e-1, 1e-2, 1e-3};
    std::array<double, 3> err_aff{}, err_omega{};
    for (int k = 0; k < 3; ++k) {
        GeometryPoint G =
            make_geometry(shrunk(s0, deltas[k]), p, Formalism::Gamma, 3);
        CurvatureBundle C = make_curvature(G);
        err_aff[k] = max_abs_diff(G.aff, Ge.aff);
        err_omega[k] = max_abs_diff(C.omega, Ce.omega);
    }
    for (const auto& err : {err_aff, err_omega}) {
        CHECK(err[0] > 1e-6);  // the ladder starts from a visible discrepancy
        double order01 = std::log10(err[0] / err[1]);
        double order12 = std::log10(err[1] / err[2]);
        CHECK(order01 >= 0.95);
        CHECK(order12 >= 0.95);
    }
}
