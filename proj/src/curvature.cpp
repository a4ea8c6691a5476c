#include "spincurv/curvature.hpp"

namespace spincurv {

CurvatureBundle make_curvature(const GeometryPoint& G) {
    if (G.order < 2)
        throw UsageError("curvature requires jet order >= 2");
    CurvatureBundle C;
    const int co = G.order - 2;  // curvature jet order

    // W = 2 d_[a A_b] - (A_a A_b - A_b A_a) on the mixed affinity.
    SpinorField dA = partial_derivative_field(G.aff);  // (a, b, A, ^B)
    SpinorField lin = dA - swap_slots(dA, 0, 1);
    // Q_{abA}^B = A_{aA}^C A_{bC}^B
    SpinorField q = contract(outer(G.aff, G.aff), 2, 4);  // (a, A, b, ^B)
    q = move_slot(q, 2, 1);                               // (a, b, A, ^B)
    C.W = lin - (q - swap_slots(q, 0, 1));
    C.W.dweight() = {};
    C.W_bar = conjugate_field(C.W);
    C.W_lo = adjust_index(C.W, 3, IndexDirection::Lower, G.metric);

    // F_ab = 2 d_[a Phi_b].
    C.F = SpinorField(G.form,
                      {{SlotKind::World, false}, {SlotKind::World, false}}, {},
                      G.order - 1);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            C.F.at({a, b}) =
                G.phi_pot[b].derivative(a) - G.phi_pot[a].derivative(b);

    // omega_ABCD = S^a_{AA'} S_B^{bA'} W_{abCD} / 2.
    SpinorField s_praise =
        adjust_index(G.conn.up_lo, 2, IndexDirection::Raise, G.metric);
    {
        // (a up, A, A' dn) x (b up, B, A' up) -> contract A'
        SpinorField t = contract(outer(G.conn.up_lo, s_praise), 5, 2);
        // (a up, A, b up, B) x (a dn, b dn, C, D)
        SpinorField u = contract(outer(t, C.W_lo), 0, 4);
        u = contract(u, 1, 3);  // (A, B, C, D)
        C.omega = scale(u, cplx(0.5));
    }
    // omega_{A'B'CD} = S^a_{AA'} S_{B'}^{bA} W_{abCD} / 2.
    SpinorField s_uraise =
        adjust_index(G.conn.up_lo, 1, IndexDirection::Raise, G.metric);
    {
        // (a up, A dn, A') x (b up, A up, B') -> contract A
        SpinorField t = contract(outer(G.conn.up_lo, s_uraise), 4, 1);
        // (a up, A', b up, B') x (a dn, b dn, C, D)
        SpinorField u = contract(outer(t, C.W_lo), 0, 4);
        u = contract(u, 1, 3);  // (A', B', C, D)
        C.omega_p = scale(u, cplx(0.5));
    }

    C.X = symmetrize(C.omega, {2, 3});
    C.Psi = symmetrize(C.X, {0, 1, 2, 3});
    // Xi_{C A' D B'} = omega_{A'B'(CD)} rearranged to pair order.
    C.Xi = permuted(symmetrize(C.omega_p, {2, 3}), {2, 0, 3, 1});

    // chi from M^{AD} X_{ABCD} = chi M_BC, fully contracted with M^{BC}/2.
    C.chi = Jet(co);
    for (int A = 0; A < 2; ++A)
        for (int B = 0; B < 2; ++B)
            for (int Cc = 0; Cc < 2; ++Cc)
                for (int D = 0; D < 2; ++D)
                    C.chi += 0.5 * G.metric.up.at({A, D}).truncated(co) *
                             G.metric.up.at({B, Cc}).truncated(co) *
                             C.X.at({A, B, Cc, D});

    // phi_AB = (i/2) omega_{ABC}^C.
    SpinorField om_mix =
        adjust_index(C.omega, 3, IndexDirection::Raise, G.metric);
    C.phi_em = scale(contract(om_mix, 3, 2), cplx(0, 0.5));

    // World curvature oracle from the Christoffel symbols.
    C.riemann = SpinorField(G.form,
                            {{SlotKind::World, false},
                             {SlotKind::World, false},
                             {SlotKind::World, false},
                             {SlotKind::World, true}},
                            {}, co);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int h = 0; h < 4; ++h)
                for (int c = 0; c < 4; ++c) {
                    Jet r = G.chris[b][h][c].derivative(a) -
                            G.chris[a][h][c].derivative(b);
                    for (int d = 0; d < 4; ++d)
                        r += G.chris[a][d][c] * G.chris[b][h][d] -
                             G.chris[b][d][c] * G.chris[a][h][d];
                    C.riemann.at({a, b, h, c}) = r;
                }
    C.riemann_lo = world_adjust(C.riemann, 3, IndexDirection::Lower, G);
    C.ricci = contract(C.riemann, 3, 1);  // R_ab = R_{ahb}^h
    C.ricci_scalar = Jet(co);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            C.ricci_scalar +=
                G.ginv[a][b].truncated(co) * C.ricci.at({a, b});
    return C;
}

}  // namespace spincurv
