#include "spincurv/geometry.hpp"

#include <cmath>

namespace spincurv {

namespace {

// Symmetric part in the two unprimed spinor slots (positions 1, 2) of an
// affinity candidate with slots (world dn, unprimed dn, unprimed dn).
SpinorField sym_spin_pair(const SpinorField& f) {
    return symmetrize(f, {1, 2});
}

}  // namespace

GeometryPoint make_geometry(const SpacetimeScenario& s, const ProbePoint& p,
                            Formalism form, int order) {
    if (order < 1 || order > kMaxOrder)
        throw UsageError("geometry jet order out of range");
    GeometryPoint G;
    G.form = form;
    G.order = order;
    G.x = seed_jets(p, order);
    G.lambda = s.lambda;
    G.kappa = s.kappa;
    G.vacuum = s.vacuum;

    JetMat<4> e;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            G.g[i][j] = s.metric[i][j](G.x);
            e[i][j] = s.tetrad[i][j](G.x);
        }
    G.ginv = jet_inverse<4>(G.g);
    G.det_g = jet_determinant<4>(G.g);
    if (G.det_g.value().real() >= 0.0)
        throw EvaluationError("metric determinant is not negative at probe");
    G.sqrt_neg_g = sqrt(-G.det_g);

    // C_{abc} = (d_a g_bc + d_b g_ac - d_c g_ab)/2, then raise the last slot.
    std::array<std::array<std::array<Jet, kDim>, kDim>, kDim> clo;
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 0; c < kDim; ++c)
                clo[a][b][c] = 0.5 * (G.g[b][c].derivative(a) +
                                      G.g[a][c].derivative(b) -
                                      G.g[a][b].derivative(c));
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 0; c < kDim; ++c) {
                Jet sum(order - 1);
                for (int d = 0; d < kDim; ++d)
                    sum += clo[a][b][d] * G.ginv[d][c];
                G.chris[a][b][c] = sum;
            }
    for (int a = 0; a < kDim; ++a) {
        Jet tr(order - 1);
        for (int b = 0; b < kDim; ++b) tr += G.chris[a][b][b];
        G.chris_trace[a] = tr;
    }

    Jet gabs = s.gamma_abs(G.x);
    Jet gphase = s.gamma_phase(G.x);
    if (form == Formalism::Gamma)
        G.gamma = gabs * exp(cplx(0, 1) * gphase);
    else
        G.gamma = Jet(order, 1.0);
    G.metric = make_spin_metric(form, G.gamma);
    G.conn = connecting_from_tetrad(e, G.g, G.ginv, form, G.gamma);

    Jet log_scale(order);  // log|gamma| or -log|E|... as relevant gradient
    if (form == Formalism::Gamma) {
        log_scale = log(gabs);
    } else if (s.log_E) {
        log_scale = (*s.log_E)(G.x);
    }
    for (int a = 0; a < kDim; ++a) {
        G.phi_pot[a] = s.potential[a](G.x);
        G.phase_grad[a] = form == Formalism::Gamma ? gphase.derivative(a)
                                                   : Jet(order - 1);
        G.theta[a] = -log_scale.derivative(a);
        G.beta[a] = G.phase_grad[a] + 2.0 * G.phi_pot[a].truncated(order - 1);
    }

    // Affinity trace A_{aB}^B = -(theta_a + 2 i Phi_a).
    G.aff_trace = SpinorField(form, {{SlotKind::World, false}}, {}, order - 1);
    for (int a = 0; a < kDim; ++a)
        G.aff_trace.at({a}) =
            -(G.theta[a] + cplx(0, 2) * G.phi_pot[a].truncated(order - 1));

    // Symmetric part, first piece: S_{(B}^{|b|D'} S^c_{C)D'} d_c g_ab / 2.
    SpinorField s_up_primed =
        adjust_index(G.conn.up_lo, 2, IndexDirection::Raise, G.metric);
    SpinorField dg(form,
                   {{SlotKind::World, false},
                    {SlotKind::World, false},
                    {SlotKind::World, false}},
                   {}, order - 1);
    for (int c = 0; c < kDim; ++c)
        for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b)
                dg.at({c, a, b}) = G.g[a][b].derivative(c);
    // (C dn, D' dn, a dn, b dn)
    SpinorField grad_spin = contract(outer(G.conn.up_lo, dg), 0, 3);
    // (B dn, D' up, C dn, D' dn, a dn) -> (B dn, C dn, a dn)
    SpinorField t1 = contract(outer(s_up_primed, grad_spin), 0, 6);
    t1 = contract(t1, 1, 3);
    t1 = scale(move_slot(t1, 2, 0), cplx(0.5));  // (a, B, C)

    // Second piece: S_{h(B}^{B'} d_a S^h_{C)B'} / 2.
    SpinorField s_lo_primed =
        adjust_index(G.conn.lo_lo, 2, IndexDirection::Raise, G.metric);
    SpinorField dS = partial_derivative_field(G.conn.up_lo);
    // (h dn, B dn, B' up) x (a dn, h up, C dn, B' dn)
    SpinorField t2 = contract(outer(s_lo_primed, dS), 4, 0);
    t2 = contract(t2, 1, 4);              // (B, a, C)
    t2 = scale(move_slot(t2, 1, 0), cplx(0.5));  // (a, B, C)

    SpinorField sym = sym_spin_pair(t1 + t2);

    // Antisymmetric (trace) part: A_{aB}^B M_BC / 2.
    SpinorField anti = scale(outer(G.aff_trace, G.metric.lo), cplx(0.5));

    SpinorField full = sym + anti;  // A_{aBC}, slots (W dn, U dn, U dn)
    full.dweight() = {};
    G.aff = adjust_index(full, 2, IndexDirection::Raise, G.metric);
    G.aff.dweight() = {};
    G.aff_bar = conjugate_field(G.aff);
    G.aff_bar.dweight() = {};
    return G;
}

SpinorField partial_derivative_field(const SpinorField& f) {
    if (f.jet_order() < 1)
        throw UsageError("cannot differentiate an order-0 field");
    std::vector<Slot> slots{{SlotKind::World, false}};
    slots.insert(slots.end(), f.slots().begin(), f.slots().end());
    SpinorField r(f.formalism(), std::move(slots), f.dweight(),
                  f.jet_order() - 1);
    for (int a = 0; a < kDim; ++a)
        for (int i = 0; i < f.size(); ++i)
            r.flat(a * f.size() + i) = f.flat(i).derivative(a);
    return r;
}

SpinorField covariant_derivative(const SpinorField& f, const GeometryPoint& G) {
    if (f.formalism() != G.form)
        throw UsageError("formalism mismatch in covariant derivative");
    SpinorField r = partial_derivative_field(f);

    // Connection terms slot by slot. The result index layout is (a, idx...),
    // with idx the original slots shifted by one.
    for (int k = 0; k < f.rank(); ++k) {
        const Slot& sl = f.slots()[k];
        int dim = slot_dim(sl.kind);
        for (int a = 0; a < kDim; ++a)
            for (int i = 0; i < f.size(); ++i) {
                std::vector<int> idx = f.unflatten(i);
                int own = idx[k];
                Jet sum(r.jet_order());
                for (int m = 0; m < dim; ++m) {
                    idx[k] = m;
                    const Jet& comp = f.at(idx);
                    switch (sl.kind) {
                        case SlotKind::World:
                            sum += sl.up ? G.chris[a][m][own] * comp
                                         : -(G.chris[a][own][m] * comp);
                            break;
                        case SlotKind::Unprimed:
                            sum += sl.up ? G.aff.at({a, m, own}) * comp
                                         : -(G.aff.at({a, own, m}) * comp);
                            break;
                        case SlotKind::Primed:
                            sum += sl.up ? G.aff_bar.at({a, m, own}) * comp
                                         : -(G.aff_bar.at({a, own, m}) * comp);
                            break;
                    }
                }
                idx[k] = own;
                idx.insert(idx.begin(), a);
                r.at(idx) += sum;
            }
    }

    // Density devices. |Delta| powers split evenly between Delta and its
    // conjugate, so c Re A_a folds into the (a, b) pair.
    const DensityWeight& dw = f.dweight();
    double a_eff = dw.weight.to_double() + 0.5 * dw.absolute_weight.to_double();
    double b_eff =
        dw.antiweight.to_double() + 0.5 * dw.absolute_weight.to_double();
    double w_world = dw.world_weight.to_double();
    if (a_eff != 0.0 || b_eff != 0.0 || w_world != 0.0) {
        for (int a = 0; a < kDim; ++a) {
            Jet dev = a_eff * G.aff_trace.at({a}) +
                      b_eff * conj(G.aff_trace.at({a})) +
                      w_world * G.chris_trace[a];
            for (int i = 0; i < f.size(); ++i) {
                std::vector<int> idx = f.unflatten(i);
                idx.insert(idx.begin(), a);
                r.at(idx) -= dev * f.flat(i);
            }
        }
    }
    return r;
}

SpinorField metric_field(const GeometryPoint& G) {
    SpinorField r(G.form, {{SlotKind::World, false}, {SlotKind::World, false}},
                  {}, G.order);
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) r.at({a, b}) = G.g[a][b];
    return r;
}

SpinorField inverse_metric_field(const GeometryPoint& G) {
    SpinorField r(G.form, {{SlotKind::World, true}, {SlotKind::World, true}},
                  {}, G.order);
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) r.at({a, b}) = G.ginv[a][b];
    return r;
}

SpinorField world_adjust(const SpinorField& f, int slot, IndexDirection dir,
                         const GeometryPoint& G) {
    if (slot < 0 || slot >= f.rank() ||
        f.slots()[slot].kind != SlotKind::World)
        throw UsageError("world_adjust: slot is not a world slot");
    bool raise = dir == IndexDirection::Raise;
    if (f.slots()[slot].up == raise)
        throw UsageError("world_adjust: slot already has the requested stair");
    SpinorField m = raise ? inverse_metric_field(G) : metric_field(G);
    SpinorField prod = outer(m, f);
    // The up slot of the contraction is the metric's when raising and the
    // field's when lowering.
    SpinorField r = raise ? contract(prod, 1, 2 + slot)
                          : contract(prod, 2 + slot, 1);
    return move_slot(r, 0, slot);
}

}  // namespace spincurv
