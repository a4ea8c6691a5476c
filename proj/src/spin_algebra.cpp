#include "spincurv/spin_algebra.hpp"

#include <cmath>

#include "spincurv/errors.hpp"

namespace spincurv {

namespace {

constexpr double kEps[2][2] = {{0, 1}, {-1, 0}};

// Hermitian flat kernel (I, sx, sy, sz)/sqrt2; s[mu][A][A'].
const cplx kKernel[4][2][2] = {
    {{{M_SQRT1_2, 0}, {0, 0}}, {{0, 0}, {M_SQRT1_2, 0}}},
    {{{0, 0}, {M_SQRT1_2, 0}}, {{M_SQRT1_2, 0}, {0, 0}}},
    {{{0, 0}, {0, -M_SQRT1_2}}, {{0, M_SQRT1_2}, {0, 0}}},
    {{{M_SQRT1_2, 0}, {0, 0}}, {{0, 0}, {-M_SQRT1_2, 0}}},
};

SpinorField eps_block(Formalism form, const Jet& factor, bool up, bool primed,
                      DensityWeight dw) {
    SlotKind k = primed ? SlotKind::Primed : SlotKind::Unprimed;
    SpinorField f(form, {{k, up}, {k, up}}, dw, factor.order());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            f.at({a, b}) = factor * kEps[a][b];
    return f;
}

}  // namespace

SpinMetric make_spin_metric(Formalism formalism, const Jet& gamma_value) {
    SpinMetric m;
    m.formalism = formalism;
    int order = gamma_value.order();
    if (formalism == Formalism::Epsilon) {
        m.gamma = Jet(order, 1.0);
        m.lo = eps_block(formalism, m.gamma, false, false, {.weight = -1});
        m.up = eps_block(formalism, m.gamma, true, false, {.weight = 1});
        m.lo_bar = eps_block(formalism, m.gamma, false, true, {.antiweight = -1});
        m.up_bar = eps_block(formalism, m.gamma, true, true, {.antiweight = 1});
        return m;
    }
    if (std::abs(gamma_value.value()) < 1e-14)
        throw EvaluationError("gamma metric function vanishes at probe point");
    m.gamma = gamma_value;
    Jet ginv = inverse(gamma_value);
    m.lo = eps_block(formalism, m.gamma, false, false, {});
    m.up = eps_block(formalism, ginv, true, false, {});
    m.lo_bar = eps_block(formalism, conj(m.gamma), false, true, {});
    m.up_bar = eps_block(formalism, conj(ginv), true, true, {});
    return m;
}

SpinorField adjust_index(const SpinorField& field, int slot,
                         IndexDirection direction, const SpinMetric& metric) {
    const Slot s = field.slots()[slot];
    if (s.kind == SlotKind::World)
        throw UsageError("adjust_index applies to spinor slots only");
    bool primed = s.kind == SlotKind::Primed;
    if (direction == IndexDirection::Raise && s.up)
        throw UsageError("adjust_index: slot already raised");
    if (direction == IndexDirection::Lower && !s.up)
        throw UsageError("adjust_index: slot already lowered");

    const SpinorField& block =
        direction == IndexDirection::Raise
            ? (primed ? metric.up_bar : metric.up)
            : (primed ? metric.lo_bar : metric.lo);

    std::vector<Slot> slots = field.slots();
    slots[slot].up = direction == IndexDirection::Raise;
    SpinorField r(field.formalism(), slots,
                  compose_weights(field.dweight(), block.dweight()),
                  std::min(field.jet_order(), block.jet_order()));
    for (int o = 0; o < r.size(); ++o) {
        std::vector<int> idx = r.unflatten(o);
        int target = idx[slot];
        Jet sum(r.jet_order());
        for (int b = 0; b < 2; ++b) {
            idx[slot] = b;
            // raised: new^A = M^{AB} old_B ; lowered: new_A = old^B M_{BA}
            const Jet& mfac = direction == IndexDirection::Raise
                                  ? block.at({target, b})
                                  : block.at({b, target});
            sum += mfac * field.at(idx);
        }
        idx[slot] = target;
        r.flat(o) = sum;
    }
    return r;
}

ConnectingObjects connecting_from_tetrad(const JetMat<4>& tetrad,
                                         const JetMat<4>& g,
                                         const JetMat<4>& ginv,
                                         Formalism formalism, const Jet& gamma) {
    int order = g[0][0].order();
    const double eta[4] = {1, -1, -1, -1};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            cplx dot = 0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    dot += tetrad[mu][a].value() * tetrad[nu][b].value() *
                           g[a][b].value();
            double want = mu == nu ? eta[mu] : 0.0;
            if (std::abs(dot - want) > 1e-8)
                throw ConfigError("tetrad does not reproduce the metric");
        }

    // co-tetrad: U[a][mu] with sum_a e_mu^a U[a][nu] = delta
    JetMat<4> co = jet_inverse<4>(tetrad);

    ConnectingObjects c;
    c.formalism = formalism;
    DensityWeight wUp{}, wDn{};
    if (formalism == Formalism::Epsilon) {
        wUp.absolute_weight = 1;   // upper spinor stairs
        wDn.absolute_weight = -1;  // lower spinor stairs
    }
    std::vector<Slot> lo_up_slots{{SlotKind::World, false},
                                  {SlotKind::Unprimed, true},
                                  {SlotKind::Primed, true}};
    std::vector<Slot> up_up_slots{{SlotKind::World, true},
                                  {SlotKind::Unprimed, true},
                                  {SlotKind::Primed, true}};
    std::vector<Slot> lo_lo_slots{{SlotKind::World, false},
                                  {SlotKind::Unprimed, false},
                                  {SlotKind::Primed, false}};
    std::vector<Slot> up_lo_slots{{SlotKind::World, true},
                                  {SlotKind::Unprimed, false},
                                  {SlotKind::Primed, false}};
    c.lo_up = SpinorField(formalism, lo_up_slots, wUp, order);
    c.up_up = SpinorField(formalism, up_up_slots, wUp, order);
    c.lo_lo = SpinorField(formalism, lo_lo_slots, wDn, order);
    c.up_lo = SpinorField(formalism, up_lo_slots, wDn, order);

    for (int a = 0; a < 4; ++a)
        for (int A = 0; A < 2; ++A)
            for (int Ap = 0; Ap < 2; ++Ap) {
                Jet v(order);
                for (int mu = 0; mu < 4; ++mu)
                    v += co[a][mu] * kKernel[mu][A][Ap];
                c.lo_up.at({a, A, Ap}) = v;
            }
    // lower both spinor stairs with the alternating arrays:
    //   S_{aAA'} = S_a^{BB'} eps_BA eps_{B'A'}
    for (int a = 0; a < 4; ++a)
        for (int A = 0; A < 2; ++A)
            for (int Ap = 0; Ap < 2; ++Ap) {
                Jet v(order);
                for (int B = 0; B < 2; ++B)
                    for (int Bp = 0; Bp < 2; ++Bp)
                        v += c.lo_up.at({a, B, Bp}) *
                             (kEps[B][A] * kEps[Bp][Ap]);
                c.lo_lo.at({a, A, Ap}) = v;
            }
    for (int a = 0; a < 4; ++a)
        for (int A = 0; A < 2; ++A)
            for (int Ap = 0; Ap < 2; ++Ap) {
                Jet vu(order), vl(order);
                for (int b = 0; b < 4; ++b) {
                    vu += ginv[a][b] * c.lo_up.at({b, A, Ap});
                    vl += ginv[a][b] * c.lo_lo.at({b, A, Ap});
                }
                c.up_up.at({a, A, Ap}) = vu;
                c.up_lo.at({a, A, Ap}) = vl;
            }

    if (formalism == Formalism::Gamma) {
        // |gamma|-scaled associations: lower spinor stairs scale by |gamma|,
        // upper spinor stairs by |gamma|^{-1}.
        Jet mag = abs_jet(gamma);
        Jet maginv = inverse(mag);
        c.lo_up = scale(c.lo_up, maginv);
        c.up_up = scale(c.up_up, maginv);
        c.lo_lo = scale(c.lo_lo, mag);
        c.up_lo = scale(c.up_lo, mag);
    }
    return c;
}

SpinorField world_spin_translate(const SpinorField& field, int slot,
                                 TranslateDirection direction,
                                 const ConnectingObjects& conn) {
    const auto& sl = field.slots();
    if (direction == TranslateDirection::WorldToSpin) {
        if (sl[slot].kind != SlotKind::World)
            throw UsageError("world_spin_translate: not a world slot");
        bool up = sl[slot].up;
        // u^{AA'} = S_a^{AA'} u^a  /  u_{AA'} = S^a_{AA'} u_a
        const SpinorField& block = up ? conn.lo_up : conn.up_lo;
        std::vector<Slot> slots = sl;
        slots[slot] = {SlotKind::Unprimed, up};
        slots.insert(slots.begin() + slot + 1, Slot{SlotKind::Primed, up});
        SpinorField r(field.formalism(), slots,
                      compose_weights(field.dweight(), block.dweight()),
                      std::min(field.jet_order(), block.jet_order()));
        for (int o = 0; o < r.size(); ++o) {
            std::vector<int> ridx = r.unflatten(o);
            int A = ridx[slot], Ap = ridx[slot + 1];
            std::vector<int> idx(ridx.begin(), ridx.end());
            idx.erase(idx.begin() + slot + 1);
            Jet sum(r.jet_order());
            for (int a = 0; a < 4; ++a) {
                idx[slot] = a;
                sum += block.at({a, A, Ap}) * field.at(idx);
            }
            r.flat(o) = sum;
        }
        return r;
    }
    // SpinToWorld: `slot` is an unprimed slot followed by a like-stair primed
    // slot.
    if (slot + 1 >= field.rank() || sl[slot].kind != SlotKind::Unprimed ||
        sl[slot + 1].kind != SlotKind::Primed || sl[slot].up != sl[slot + 1].up)
        throw UsageError(
            "world_spin_translate: needs an adjacent (unprimed, primed) pair");
    bool up = sl[slot].up;
    // u^a = S^a_{AA'} u^{AA'}  /  u_a = S_a^{AA'} u_{AA'}
    const SpinorField& block = up ? conn.up_lo : conn.lo_up;
    std::vector<Slot> slots = sl;
    slots[slot] = {SlotKind::World, up};
    slots.erase(slots.begin() + slot + 1);
    SpinorField r(field.formalism(), slots,
                  compose_weights(field.dweight(), block.dweight()),
                  std::min(field.jet_order(), block.jet_order()));
    for (int o = 0; o < r.size(); ++o) {
        std::vector<int> ridx = r.unflatten(o);
        int a = ridx[slot];
        std::vector<int> idx(ridx.begin(), ridx.end());
        idx.insert(idx.begin() + slot + 1, 0);
        Jet sum(r.jet_order());
        for (int A = 0; A < 2; ++A)
            for (int Ap = 0; Ap < 2; ++Ap) {
                idx[slot] = A;
                idx[slot + 1] = Ap;
                sum += block.at({a, A, Ap}) * field.at(idx);
            }
        r.flat(o) = sum;
    }
    return r;
}

SpinorField all_world_to_spin(const SpinorField& field,
                              const ConnectingObjects& conn) {
    SpinorField r = field;
    for (int k = 0; k < r.rank(); ++k)
        if (r.slots()[k].kind == SlotKind::World)
            r = world_spin_translate(r, k, TranslateDirection::WorldToSpin,
                                     conn);
    return r;
}

SpinorField alternating_spinor(const SpinMetric& metric) {
    int order = metric.lo.jet_order();
    std::vector<Slot> slots;
    for (int k = 0; k < 4; ++k) {
        slots.push_back({SlotKind::Unprimed, false});
        slots.push_back({SlotKind::Primed, false});
    }
    DensityWeight dw = compose_weights(
        compose_weights(metric.lo.dweight(), metric.lo.dweight()),
        compose_weights(metric.lo_bar.dweight(), metric.lo_bar.dweight()));
    SpinorField e(metric.lo.formalism(), slots, dw, order);
    for (int o = 0; o < e.size(); ++o) {
        std::vector<int> i = e.unflatten(o);
        int A = i[0], Ap = i[1], B = i[2], Bp = i[3], C = i[4], Cp = i[5],
            D = i[6], Dp = i[7];
        Jet t1 = metric.lo.at({A, C}) * metric.lo.at({B, D}) *
                 metric.lo_bar.at({Ap, Dp}) * metric.lo_bar.at({Bp, Cp});
        Jet t2 = metric.lo.at({A, D}) * metric.lo.at({B, C}) *
                 metric.lo_bar.at({Ap, Cp}) * metric.lo_bar.at({Bp, Dp});
        e.flat(o) = (t1 - t2) * cplx(0, 1);
    }
    return e;
}

}  // namespace spincurv
