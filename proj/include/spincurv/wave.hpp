// spincurv — second-order operators and field-equation residuals: the
// invariant box operator, the symmetrized commutator derivatives Delta_AB and
// Delta_{A'B'}, the beta-dependent gauge scalars, and residual assemblies for
// the Maxwell, potential, graviton, and Dirac equations in both formalisms.

#pragma once

#include "spincurv/curvature.hpp"

namespace spincurv {

// nabla_{AA'} f: the covariant derivative with its new world slot translated
// to a lower (unprimed, primed) pair, prepended to the field's slots.
SpinorField spin_gradient(const SpinorField& f, const GeometryPoint& G);

// box f = nabla^a nabla_a f (two covariant derivatives, world contraction).
SpinorField box_field(const SpinorField& f, const GeometryPoint& G);

// beta^h nabla_h f, the drift term of the gamma-formalism wave equations.
SpinorField beta_dot_grad(const SpinorField& f, const GeometryPoint& G);

// Delta_AB f and Delta_{A'B'} f extracted from the decomposition
//   [nabla_{AA'}, nabla_{BB'}] = conj(M)_{A'B'} Delta_AB + M_AB Delta-bar,
// via the half-contraction with the inverse conjugate metric spinor. The
// result prepends two lower unprimed (resp. primed) slots.
SpinorField delta_unprimed(const SpinorField& f, const GeometryPoint& G);
SpinorField delta_primed(const SpinorField& f, const GeometryPoint& G);

// Gauge scalars of the gamma-formalism wave equations:
//   Upsilon_P = beta^h beta_h + i nabla_h beta^h,
//   Upsilon_G = 2 (beta^h beta_h + Upsilon_P).
Jet upsilon_P(const GeometryPoint& G);
Jet upsilon_G(const GeometryPoint& G);

// First-order residuals. Each vanishes on a scenario whose inputs satisfy the
// corresponding field equation.

// nabla^{AB'} phi_AB minus the gamma-formalism drift i beta^{AB'} phi_AB
// (no drift term in the epsilon-formalism).
SpinorField maxwell_residual(const CurvatureBundle& C, const GeometryPoint& G);

// nabla^{AA'} Psi_ABCD minus 2i beta^{AA'} Psi_ABCD (gamma) / zero (epsilon).
// Requires a vacuum scenario.
SpinorField graviton_divergence_residual(const CurvatureBundle& C,
                                         const GeometryPoint& G);

// Contracted Bianchi relation (-8) nabla^{AA'} Xi_{AA'BB'} - nabla_{BB'} R;
// an identity on any scenario.
SpinorField bianchi_contracted_residual(const CurvatureBundle& C,
                                        const GeometryPoint& G);

// Wave-equation residuals. These differentiate the curvature once more, so
// they need geometry jets of order 4.

// (box + 8 chi / 3) phi_AB - 2 Psi_AB^{CD} phi_CD, with the gamma-formalism
// drift -2i beta^h nabla_h - Upsilon_P added on the left.
SpinorField photon_wave_residual(const CurvatureBundle& C,
                                 const GeometryPoint& G);

// (box + R/4) Phi_{AA'} - nabla_{AA'} Theta with Theta = nabla_h Phi^h;
// vanishes when the potential satisfies the source-free Maxwell equation.
SpinorField potential_wave_residual(const CurvatureBundle& C,
                                    const GeometryPoint& G);

// World form box Phi_a + R_a^b Phi_b - nabla_a Theta - nabla^b F_ba; an
// identity for any potential.
SpinorField potential_world_residual(const CurvatureBundle& C,
                                     const GeometryPoint& G);

// (box + 4 chi) Psi_ABCD - 6 Psi_{MN(AB} Psi_{CD)}^{MN}, with the
// gamma-formalism drift -4i beta^h nabla_h - Upsilon_G added on the left.
// Requires a vacuum scenario.
SpinorField graviton_wave_residual(const CurvatureBundle& C,
                                   const GeometryPoint& G);

// The contravariant companion (box + 4i beta^h nabla_h - conj(Upsilon_G)
// + 4 chi) Psi^ABCD - 6 Psi^{MN(AB} Psi^{CD)}_{MN}; the drift sign and the
// conjugated gauge scalar implement the covariant/contravariant interchange.
SpinorField graviton_wave_residual_contra(const CurvatureBundle& C,
                                          const GeometryPoint& G);

struct DiracPair {
    SpinorField psi;  // psi^A
    SpinorField chi;  // chi_{A'}
    double mass = 0;
    double mu = 0;  // normalized rest mass m / sqrt(2)
};

// Plane-wave solution psi^A = psi0^A exp(-i p.x) on a flat scenario, with
// p^a = (E, 0, 0, kz) and E = sqrt(kz^2 + m^2); chi is built from the
// first of the coupled equations, so the pair solves the full system exactly
// when the dispersion relation holds.
DiracPair make_plane_wave_pair(const GeometryPoint& G, double m, double kz,
                               const std::array<cplx, 2>& psi0);

// Residuals of nabla_{AA'} psi^A + i mu chi_{A'} and
// nabla^{AA'} chi_{A'} + i mu psi^A.
std::pair<SpinorField, SpinorField> dirac_first_order_residual(
    const DiracPair& d, const GeometryPoint& G);

// (box + R/4 + m^2) psi^A + 2i phi^A_B psi^B (gamma; the coupling term is
// absent in the epsilon-formalism).
SpinorField dirac_wave_residual(const DiracPair& d, const CurvatureBundle& C,
                                const GeometryPoint& G);

}  // namespace spincurv
