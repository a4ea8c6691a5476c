// spincurv — curvature at a probe point: the mixed spin curvature, its
// bivector decomposition, the gravitational and electromagnetic spinors, and
// an independently computed world Riemann tensor for cross-checks.

#pragma once

#include "spincurv/geometry.hpp"

namespace spincurv {

struct CurvatureBundle {
    // Spin curvature W_{abA}^B = 2 d_[a A_{b]A}^B - (A_a A_b - A_b A_a),
    // slots (world dn, world dn, unprimed dn, unprimed up), its conjugate,
    // and the fully lowered form W_{abAB}.
    SpinorField W;
    SpinorField W_bar;
    SpinorField W_lo;

    // Electromagnetic field strength F_ab = 2 d_[a Phi_b].
    SpinorField F;

    // Curvature spinors from the bivector decomposition:
    //   omega_ABCD   = S^a_{AA'} S_B^{bA'} W_{abCD} / 2
    //   omega_p      = S^a_{AA'} S_{B'}^{bA} W_{abCD} / 2   (slots A'B'CD)
    SpinorField omega;
    SpinorField omega_p;

    // X_{ABCD} = omega_{AB(CD)}; Xi stored with slots (C, A', D, B');
    // chi = X_{AB}^{AB} / 2 (real in consistent geometries);
    // Psi = X_{(ABCD)} the gravitational (Weyl) spinor.
    SpinorField X;
    SpinorField Xi;
    Jet chi;
    SpinorField Psi;

    // phi_AB = (i/2) omega_{ABC}^C: the electromagnetic curvature spinor.
    SpinorField phi_em;

    // World-geometry oracle computed directly from the Christoffel symbols:
    // R_{abh}^c with [nabla_a, nabla_b] u^c = R_{abh}^c u^h, its fully
    // lowered form, the Ricci contraction R_ab = R_{ahb}^h and scalar.
    SpinorField riemann;
    SpinorField riemann_lo;
    SpinorField ricci;
    Jet ricci_scalar;
};

// Requires G.order >= 2 (the curvature carries order G.order - 2).
CurvatureBundle make_curvature(const GeometryPoint& G);

}  // namespace spincurv
