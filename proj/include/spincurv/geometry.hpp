// spincurv — per-point geometry bundle: metric, Christoffel symbols,
// connecting objects, the spin affinity of the chosen formalism, and the
// covariant derivative acting on arbitrary world-spin densities.

#pragma once

#include "spincurv/scenario.hpp"
#include "spincurv/spin_algebra.hpp"

namespace spincurv {

// Everything needed to differentiate covariantly at one probe point. All
// members are jets about the point, so repeated derivatives remain exact
// until the seed order is exhausted (each derivative lowers jet order by 1;
// mixed-order arithmetic truncates to the lower order automatically).
struct GeometryPoint {
    Formalism form = Formalism::Epsilon;
    int order = 0;                // jet order of the metric-level quantities
    std::array<Jet, kDim> x;      // coordinate seeds

    JetMat<4> g, ginv;
    Jet det_g;
    Jet sqrt_neg_g;

    // Christoffel symbols C_{ab}^c (derivative slot a, contracted slot b,
    // upper slot c) and the trace C_a = C_{ab}^b = d_a log sqrt(-g).
    std::array<std::array<std::array<Jet, kDim>, kDim>, kDim> chris;
    std::array<Jet, kDim> chris_trace;

    Jet gamma;                    // metric-spinor scalar; 1 in epsilon form
    SpinMetric metric;
    ConnectingObjects conn;

    std::array<Jet, kDim> phi_pot;     // electromagnetic potential Phi_a
    std::array<Jet, kDim> phase_grad;  // d_a arg(gamma); zero in epsilon form
    // theta_a = d_a log(1/|gamma|) (gamma form) or Pi_a = -d_a log|E|
    // (epsilon form): the real gradient entering the affinity trace.
    std::array<Jet, kDim> theta;
    std::array<Jet, kDim> beta;        // beta_a = d_a arg(gamma) + 2 Phi_a

    // Spin affinity A_{aB}^C, slots (world dn, unprimed dn, unprimed up);
    // conjugate A~_{aB'}^{C'}; trace A_{aB}^B as a (world dn) field.
    // Weight metadata on these is cleared: the affinity is not a tensor.
    SpinorField aff;
    SpinorField aff_bar;
    SpinorField aff_trace;

    double lambda = 0.0;
    double kappa = 1.0;
    bool vacuum = true;
};

// Evaluate the scenario's geometry at p with seeds of the given jet order
// (metric-level quantities carry that order; the affinity one less).
GeometryPoint make_geometry(const SpacetimeScenario& s, const ProbePoint& p,
                            Formalism form, int order);

// Plain partial derivative d_a, prepending a lower world slot. Valid for any
// field computed in jet arithmetic from the point's seeds.
SpinorField partial_derivative_field(const SpinorField& f);

// Covariant derivative nabla_a, prepending a lower world slot: the partial
// derivative plus Christoffel terms per world slot, affinity terms per spinor
// slot, and the density devices
//   -(a A_a + b conj(A_a) + c Re A_a) f  for spin weights (a, b, c),
//   -w C_a f                             for world weight w.
SpinorField covariant_derivative(const SpinorField& f, const GeometryPoint& G);

// The metric / inverse metric as rank-2 fields (world dn dn / up up).
SpinorField metric_field(const GeometryPoint& G);
SpinorField inverse_metric_field(const GeometryPoint& G);

// Raise or lower one world slot with the world metric.
SpinorField world_adjust(const SpinorField& f, int slot, IndexDirection dir,
                         const GeometryPoint& G);

}  // namespace spincurv
