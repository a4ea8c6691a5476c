#include "spincurv/wave.hpp"

#include <cmath>

namespace spincurv {

namespace {

// beta_a as a lower world field (jet order G.order - 1).
SpinorField beta_lower(const GeometryPoint& G) {
    SpinorField b(G.form, {{SlotKind::World, false}}, {}, G.order - 1);
    for (int a = 0; a < kDim; ++a) b.at({a}) = G.beta[a];
    return b;
}

SpinorField beta_upper(const GeometryPoint& G) {
    SpinorField b(G.form, {{SlotKind::World, true}}, {}, G.order - 1);
    for (int a = 0; a < kDim; ++a) {
        Jet sum(G.order - 1);
        for (int h = 0; h < kDim; ++h) sum += G.ginv[a][h] * G.beta[h];
        b.at({a}) = sum;
    }
    return b;
}

// beta^{AA'} with both spinor slots raised.
SpinorField beta_spin_upper(const GeometryPoint& G) {
    SpinorField s =
        world_spin_translate(beta_lower(G), 0, TranslateDirection::WorldToSpin,
                             G.conn);
    s = adjust_index(s, 0, IndexDirection::Raise, G.metric);
    s = adjust_index(s, 1, IndexDirection::Raise, G.metric);
    return s;
}

Jet beta_squared(const GeometryPoint& G) {
    Jet sum(G.order - 1);
    for (int a = 0; a < kDim; ++a)
        for (int h = 0; h < kDim; ++h)
            sum += G.ginv[a][h] * G.beta[a] * G.beta[h];
    return sum;
}

// Theta = nabla_h Phi^h, the covariant divergence of the potential.
SpinorField potential_divergence(const GeometryPoint& G) {
    SpinorField p(G.form, {{SlotKind::World, false}}, {}, G.order);
    for (int a = 0; a < kDim; ++a) p.at({a}) = G.phi_pot[a];
    SpinorField pup = world_adjust(p, 0, IndexDirection::Raise, G);
    return contract(covariant_derivative(pup, G), 1, 0);
}

SpinorField delta_impl(const SpinorField& f, const GeometryPoint& G,
                       bool primed) {
    SpinorField dd = covariant_derivative(covariant_derivative(f, G), G);
    SpinorField t =
        world_spin_translate(dd, 0, TranslateDirection::WorldToSpin, G.conn);
    t = world_spin_translate(t, 2, TranslateDirection::WorldToSpin, G.conn);
    // (A, A', B, B', rest); antisymmetrize the derivative pair.
    SpinorField comm = t - swap_slots(swap_slots(t, 0, 2), 1, 3);
    SpinorField u = outer(primed ? G.metric.up : G.metric.up_bar, comm);
    if (primed) {
        u = contract(u, 0, 2);  // M^{AB} against A
        u = contract(u, 0, 2);  // ... and B
    } else {
        u = contract(u, 0, 3);  // conj(M)^{A'B'} against A'
        u = contract(u, 0, 3);  // ... and B'
    }
    return scale(u, cplx(0.5));
}

void require_vacuum(const GeometryPoint& G, const char* what) {
    if (!G.vacuum)
        throw UsageError(std::string(what) +
                         " requires a vacuum scenario (trace-free part of the "
                         "Ricci spinor must vanish)");
}

}  // namespace

SpinorField spin_gradient(const SpinorField& f, const GeometryPoint& G) {
    return world_spin_translate(covariant_derivative(f, G), 0,
                                TranslateDirection::WorldToSpin, G.conn);
}

SpinorField box_field(const SpinorField& f, const GeometryPoint& G) {
    SpinorField dd = covariant_derivative(covariant_derivative(f, G), G);
    return contract(world_adjust(dd, 0, IndexDirection::Raise, G), 0, 1);
}

SpinorField beta_dot_grad(const SpinorField& f, const GeometryPoint& G) {
    SpinorField d = covariant_derivative(f, G);
    return contract(outer(beta_upper(G), d), 0, 1);
}

SpinorField delta_unprimed(const SpinorField& f, const GeometryPoint& G) {
    return delta_impl(f, G, false);
}

SpinorField delta_primed(const SpinorField& f, const GeometryPoint& G) {
    return delta_impl(f, G, true);
}

Jet upsilon_P(const GeometryPoint& G) {
    SpinorField db = covariant_derivative(beta_upper(G), G);
    Jet divb = contract(db, 1, 0).flat(0);
    return beta_squared(G) + cplx(0, 1) * divb;
}

Jet upsilon_G(const GeometryPoint& G) {
    return 2.0 * (beta_squared(G) + upsilon_P(G));
}

SpinorField maxwell_residual(const CurvatureBundle& C, const GeometryPoint& G) {
    SpinorField sg = spin_gradient(C.phi_em, G);  // (C, C', A, B)
    sg = adjust_index(sg, 0, IndexDirection::Raise, G.metric);
    sg = adjust_index(sg, 1, IndexDirection::Raise, G.metric);
    SpinorField r = contract(sg, 0, 2);  // (C' up, B)
    if (G.form == Formalism::Gamma) {
        SpinorField t = contract(outer(beta_spin_upper(G), C.phi_em), 0, 2);
        r -= scale(t, cplx(0, 1));
    }
    return r;
}

SpinorField graviton_divergence_residual(const CurvatureBundle& C,
                                         const GeometryPoint& G) {
    require_vacuum(G, "graviton divergence residual");
    SpinorField sg = spin_gradient(C.Psi, G);  // (E, E', A, B, C, D)
    sg = adjust_index(sg, 0, IndexDirection::Raise, G.metric);
    sg = adjust_index(sg, 1, IndexDirection::Raise, G.metric);
    SpinorField r = contract(sg, 0, 2);  // (E' up, B, C, D)
    if (G.form == Formalism::Gamma) {
        SpinorField t = contract(outer(beta_spin_upper(G), C.Psi), 0, 2);
        r -= scale(t, cplx(0, 2));
    }
    return r;
}

SpinorField bianchi_contracted_residual(const CurvatureBundle& C,
                                        const GeometryPoint& G) {
    SpinorField sg = spin_gradient(C.Xi, G);  // (C, C', A, A', B, B')
    sg = adjust_index(sg, 0, IndexDirection::Raise, G.metric);
    sg = adjust_index(sg, 1, IndexDirection::Raise, G.metric);
    SpinorField div = contract(sg, 0, 2);  // (C' up, A', B, B')
    div = contract(div, 0, 1);             // (B, B')
    SpinorField r = scale(div, cplx(-8));
    r -= spin_gradient(scalar_field(G.form, C.ricci_scalar), G);
    return r;
}

SpinorField photon_wave_residual(const CurvatureBundle& C,
                                 const GeometryPoint& G) {
    SpinorField r = box_field(C.phi_em, G);
    r += scale(C.phi_em, (8.0 / 3.0) * C.chi);
    if (G.form == Formalism::Gamma) {
        r -= scale(beta_dot_grad(C.phi_em, G), cplx(0, 2));
        r -= scale(C.phi_em, upsilon_P(G));
    }
    SpinorField pup = adjust_index(C.Psi, 2, IndexDirection::Raise, G.metric);
    pup = adjust_index(pup, 3, IndexDirection::Raise, G.metric);
    SpinorField t = contract(outer(pup, C.phi_em), 2, 4);
    t = contract(t, 2, 3);  // Psi_AB^{CD} phi_CD
    r -= scale(t, cplx(2));
    return r;
}

SpinorField potential_wave_residual(const CurvatureBundle& C,
                                    const GeometryPoint& G) {
    SpinorField p(G.form, {{SlotKind::World, false}}, {}, G.order);
    for (int a = 0; a < kDim; ++a) p.at({a}) = G.phi_pot[a];
    SpinorField ps =
        world_spin_translate(p, 0, TranslateDirection::WorldToSpin, G.conn);
    SpinorField r = box_field(ps, G);
    r += scale(ps, 0.25 * C.ricci_scalar);
    r -= spin_gradient(potential_divergence(G), G);
    return r;
}

SpinorField potential_world_residual(const CurvatureBundle& C,
                                     const GeometryPoint& G) {
    SpinorField p(G.form, {{SlotKind::World, false}}, {}, G.order);
    for (int a = 0; a < kDim; ++a) p.at({a}) = G.phi_pot[a];
    SpinorField r = box_field(p, G);
    SpinorField ric_mixed = world_adjust(C.ricci, 1, IndexDirection::Raise, G);
    r += contract(outer(ric_mixed, p), 1, 2);  // R_a^b Phi_b
    r -= covariant_derivative(potential_divergence(G), G);
    SpinorField dF = covariant_derivative(C.F, G);  // (c, a, b)
    dF = world_adjust(dF, 0, IndexDirection::Raise, G);
    r -= contract(dF, 0, 1);  // nabla^b F_ba
    return r;
}

SpinorField graviton_wave_residual(const CurvatureBundle& C,
                                   const GeometryPoint& G) {
    require_vacuum(G, "graviton wave residual");
    SpinorField r = box_field(C.Psi, G);
    r += scale(C.Psi, 4.0 * C.chi);
    if (G.form == Formalism::Gamma) {
        r -= scale(beta_dot_grad(C.Psi, G), cplx(0, 4));
        r -= scale(C.Psi, upsilon_G(G));
    }
    // 6 Psi_{MN(AB} Psi_{CD)}^{MN}
    SpinorField p2 = adjust_index(C.Psi, 2, IndexDirection::Raise, G.metric);
    p2 = adjust_index(p2, 3, IndexDirection::Raise, G.metric);
    SpinorField t = contract(outer(C.Psi, p2), 6, 0);
    t = contract(t, 5, 0);
    t = symmetrize(t, {0, 1, 2, 3});
    r -= scale(t, cplx(6));
    return r;
}

SpinorField graviton_wave_residual_contra(const CurvatureBundle& C,
                                          const GeometryPoint& G) {
    require_vacuum(G, "graviton wave residual");
    SpinorField pu = C.Psi;
    for (int k = 0; k < 4; ++k)
        pu = adjust_index(pu, k, IndexDirection::Raise, G.metric);
    SpinorField r = box_field(pu, G);
    r += scale(pu, 4.0 * C.chi);
    if (G.form == Formalism::Gamma) {
        r += scale(beta_dot_grad(pu, G), cplx(0, 4));
        r -= scale(pu, conj(upsilon_G(G)));
    }
    // 6 Psi^{MN(AB} Psi^{CD)}_{MN}
    SpinorField p2 = adjust_index(pu, 2, IndexDirection::Lower, G.metric);
    p2 = adjust_index(p2, 3, IndexDirection::Lower, G.metric);
    SpinorField t = contract(outer(pu, p2), 0, 6);
    t = contract(t, 0, 5);
    t = symmetrize(t, {0, 1, 2, 3});
    r -= scale(t, cplx(6));
    return r;
}

DiracPair make_plane_wave_pair(const GeometryPoint& G, double m, double kz,
                               const std::array<cplx, 2>& psi0) {
    DiracPair d;
    d.mass = m;
    d.mu = m / std::sqrt(2.0);
    double E = std::sqrt(kz * kz + m * m);
    Jet phase = exp(cplx(0, -1) * (E * G.x[0] - kz * G.x[3]));

    DensityWeight wpsi{}, wchi{};
    if (G.form == Formalism::Epsilon) {
        wpsi.weight = {1, 2};
        wchi.antiweight = {-1, 2};
    }
    d.psi = SpinorField(G.form, {{SlotKind::Unprimed, true}}, wpsi, G.order);
    d.psi.at({0}) = psi0[0] * phase;
    d.psi.at({1}) = psi0[1] * phase;

    // chi_{A'} = p_{AA'} psi^A / mu with p_{AA'} = S^a_{AA'} p_a.
    std::array<cplx, kDim> p_lo{E, 0, 0, -kz};
    d.chi = SpinorField(G.form, {{SlotKind::Primed, false}}, wchi, G.order);
    for (int Ap = 0; Ap < 2; ++Ap) {
        Jet sum(G.order);
        for (int A = 0; A < 2; ++A)
            for (int a = 0; a < kDim; ++a)
                sum += p_lo[a] * G.conn.up_lo.at({a, A, Ap}) * d.psi.at({A});
        d.chi.at({Ap}) = sum * (1.0 / d.mu);
    }
    return d;
}

std::pair<SpinorField, SpinorField> dirac_first_order_residual(
    const DiracPair& d, const GeometryPoint& G) {
    SpinorField sg1 = spin_gradient(d.psi, G);  // (A, A', B up)
    SpinorField r1 = contract(sg1, 2, 0);       // (A')
    r1 += scale(d.chi, cplx(0, d.mu));

    SpinorField sg2 = spin_gradient(d.chi, G);  // (B, B', A' dn)
    sg2 = adjust_index(sg2, 0, IndexDirection::Raise, G.metric);
    sg2 = adjust_index(sg2, 1, IndexDirection::Raise, G.metric);
    SpinorField r2 = contract(sg2, 1, 2);  // (B up)
    r2 += scale(d.psi, cplx(0, d.mu));
    return {r1, r2};
}

SpinorField dirac_wave_residual(const DiracPair& d, const CurvatureBundle& C,
                                const GeometryPoint& G) {
    SpinorField r = box_field(d.psi, G);
    Jet factor = 0.25 * C.ricci_scalar + cplx(d.mass * d.mass);
    r += scale(d.psi, factor);
    if (G.form == Formalism::Gamma) {
        SpinorField phimix =
            adjust_index(C.phi_em, 0, IndexDirection::Raise, G.metric);
        SpinorField t = contract(outer(phimix, d.psi), 2, 1);  // (A up)
        r += scale(t, cplx(0, 2));
    }
    return r;
}

}  // namespace spincurv
