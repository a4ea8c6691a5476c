// spincurv — Weyl gauge transformations: per-point group data, the action on
// arbitrary weighted spinor fields, the inhomogeneous affinity law, and the
// input-level rewriting of a scenario (the independent second path used by
// every covariance check).

#pragma once

#include "spincurv/geometry.hpp"

namespace spincurv {

// The gauge element at one point, in jet form: Delta = rho e^{2i Lambda} is
// the determinant of the group element lam * identity with lam = sqrt(Delta).
struct GaugePoint {
    Jet delta;
    Jet lam;
    std::array<Jet, kDim> dlog_delta;  // d_a log Delta
    std::array<Jet, kDim> dlambda;     // d_a Lambda
    std::array<Jet, kDim> dlog_rho;    // d_a log rho
};

GaugePoint eval_gauge(const GaugeSpec& spec, const std::array<Jet, kDim>& x);

// Transform a tensorial field: every lower unprimed slot contributes lam,
// upper unprimed 1/lam, primed slots the conjugates, and the density weights
// contribute Delta^a conj(Delta)^b |Delta|^c. The group element is a scalar
// matrix, so the whole action is one multiplicative jet.
SpinorField apply_gauge(const SpinorField& f, const GaugePoint& g);

// The affinity transformation law, short (scalar) form:
//   A'_{aB}^C = A_{aB}^C + (d_a log Delta / 2) delta_B^C.
SpinorField gauge_affinity(const SpinorField& aff, const GaugePoint& g);

// The same law in full matrix form (dL + L A) L^{-1}, kept as a cross-check.
SpinorField gauge_affinity_long(const SpinorField& aff, const GaugePoint& g);

// Rewrite the scenario inputs under the gauge element: |gamma| -> rho|gamma|,
// arg gamma -> arg gamma + 2 Lambda, Phi_a -> Phi_a - d_a Lambda,
// log|E| -> log|E| + log rho. Geometry rebuilt from the result is the
// independent path of every covariance check. Requires metric jet order <= 3
// (the potential wrapper differentiates Lambda at one order higher).
SpacetimeScenario gauged_scenario(const SpacetimeScenario& s,
                                  const GaugeSpec& spec);

}  // namespace spincurv
