// Metric spinors, slot algebra, connecting objects: frozen component values
// plus structural round-trip properties.

#include <cmath>
#include <doctest.h>

#include "spincurv/scenario.hpp"
#include "spincurv/spin_algebra.hpp"

using namespace spincurv;

namespace {

SpinMetric eps_metric(int order = 2) {
    return make_spin_metric(Formalism::Epsilon, Jet(order, 1.0));
}

Jet J(cplx v, int order = 2) { return Jet(order, v); }

}  // namespace

TEST_CASE("alternating blocks have the frozen component values") {
    SpinMetric m = eps_metric();
    CHECK(m.lo.at({0, 1}).value() == cplx(1));
    CHECK(m.lo.at({1, 0}).value() == cplx(-1));
    CHECK(m.lo.at({0, 0}).value() == cplx(0));
    CHECK(m.up.at({0, 1}).value() == cplx(1));
    CHECK(m.up_bar.at({1, 0}).value() == cplx(-1));
    // Full self-contraction M^{AB} M_{AB} = 2.
    SpinorField two = contract(contract(outer(m.up, m.lo), 0, 2), 0, 1);
    CHECK(std::abs(two.flat(0).value() - 2.0) < 1e-15);
}

TEST_CASE("raise-then-lower is the identity under staggered conventions") {
    for (Formalism form : {Formalism::Epsilon, Formalism::Gamma}) {
        SpinMetric m = make_spin_metric(form, J(cplx(0.8, 0.45)));
        SpinorField nu(form, {{SlotKind::Unprimed, false}}, {}, 2);
        nu.at({0}) = J(cplx(0.3, -1.1));
        nu.at({1}) = J(cplx(-0.7, 0.2));
        SpinorField up = adjust_index(nu, 0, IndexDirection::Raise, m);
        // nu^0 = M^{01} nu_1, nu^1 = M^{10} nu_0
        cplx minv = form == Formalism::Gamma
                        ? 1.0 / cplx(0.8, 0.45)
                        : cplx(1.0);
        CHECK(std::abs(up.at({0}).value() - minv * nu.at({1}).value()) < 1e-14);
        CHECK(std::abs(up.at({1}).value() + minv * nu.at({0}).value()) < 1e-14);
        SpinorField back = adjust_index(up, 0, IndexDirection::Lower, m);
        CHECK(max_abs_diff(back, nu) < 1e-14);
        // Primed slots round-trip with the conjugate blocks.
        SpinorField mu = conjugate_field(nu);
        SpinorField pb = adjust_index(
            adjust_index(mu, 0, IndexDirection::Raise, m), 0,
            IndexDirection::Lower, m);
        CHECK(max_abs_diff(pb, mu) < 1e-14);
    }
}

TEST_CASE("epsilon-form raising and lowering shift the density weight") {
    SpinMetric m = eps_metric();
    SpinorField nu(Formalism::Epsilon, {{SlotKind::Unprimed, false}}, {}, 2);
    nu.at({0}) = J(1.0);
    SpinorField up = adjust_index(nu, 0, IndexDirection::Raise, m);
    CHECK(up.dweight().weight == Rational(1));
    SpinorField down = adjust_index(up, 0, IndexDirection::Lower, m);
    CHECK(down.dweight().weight == Rational(0));
    SpinorField upP =
        adjust_index(conjugate_field(nu), 0, IndexDirection::Raise, m);
    CHECK(upP.dweight().antiweight == Rational(1));
    CHECK(upP.dweight().weight == Rational(0));
}

TEST_CASE("flat connecting objects reduce to the Hermitian basis") {
    // Identity tetrad on the flat metric: S_a^{AA'} = (I, sx, sy, sz)/sqrt2.
    JetMat<4> g{}, ginv{}, e{};
    for (int i = 0; i < 4; ++i) {
        double sgn = i == 0 ? 1.0 : -1.0;
        g[i][i] = J(sgn);
        ginv[i][i] = J(sgn);
        e[i][i] = J(1.0);
    }
    ConnectingObjects c = connecting_from_tetrad(
        e, g, ginv, Formalism::Epsilon, J(1.0));
    double r = M_SQRT1_2;
    CHECK(std::abs(c.lo_up.at({0, 0, 0}).value() - r) < 1e-14);
    CHECK(std::abs(c.lo_up.at({0, 1, 1}).value() - r) < 1e-14);
    CHECK(std::abs(c.lo_up.at({1, 0, 1}).value() - r) < 1e-14);
    CHECK(std::abs(c.lo_up.at({1, 1, 0}).value() - r) < 1e-14);
    CHECK(std::abs(c.lo_up.at({2, 0, 1}).value() - cplx(0, -r)) < 1e-14);
    CHECK(std::abs(c.lo_up.at({2, 1, 0}).value() - cplx(0, r)) < 1e-14);
    CHECK(std::abs(c.lo_up.at({3, 0, 0}).value() - r) < 1e-14);
    CHECK(std::abs(c.lo_up.at({3, 1, 1}).value() + r) < 1e-14);
    CHECK(std::abs(c.lo_up.at({3, 0, 1}).value()) < 1e-15);
}

TEST_CASE("connecting objects reproduce the metric and the world delta") {
    SpacetimeScenario s = catalog_get("schwarzschild(1.0)");
    auto points = make_probe_set(s.chart, 4, 7);
    for (Formalism form : {Formalism::Epsilon, Formalism::Gamma}) {
        for (const ProbePoint& p : points) {
            auto x = seed_jets(p, 1);
            JetMat<4> g, e;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    g[i][j] = s.metric[i][j](x);
                    e[i][j] = s.tetrad[i][j](x);
                }
            JetMat<4> ginv = jet_inverse<4>(g);
            Jet gamma = s.gamma_abs(x) * exp(cplx(0, 1) * s.gamma_phase(x));
            ConnectingObjects c =
                connecting_from_tetrad(e, g, ginv, form, gamma);
            // S_a^{AA'} S_{b AA'} = g_ab
            SpinorField gg =
                contract(contract(outer(c.lo_up, c.lo_lo), 1, 4), 1, 3);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    CHECK(std::abs(gg.at({a, b}).value() -
                                   g[a][b].value()) < 1e-10);
            // S_a^{AA'} S^b_{AA'} = delta_a^b
            SpinorField dd =
                contract(contract(outer(c.lo_up, c.up_lo), 1, 4), 1, 3);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    CHECK(std::abs(dd.at({a, b}).value() -
                                   (a == b ? 1.0 : 0.0)) < 1e-10);
        }
    }
}

TEST_CASE("world-spin translation round-trips a random vector") {
    SpacetimeScenario s = catalog_get("de_sitter(0.3)");
    ProbePoint p = make_probe_set(s.chart, 1, 3)[0];
    auto x = seed_jets(p, 1);
    JetMat<4> g, e;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            g[i][j] = s.metric[i][j](x);
            e[i][j] = s.tetrad[i][j](x);
        }
    ConnectingObjects c = connecting_from_tetrad(
        e, g, jet_inverse<4>(g), Formalism::Gamma,
        s.gamma_abs(x) * exp(cplx(0, 1) * s.gamma_phase(x)));
    SpinorField u(Formalism::Gamma, {{SlotKind::World, true}}, {}, 1);
    u.at({0}) = J(cplx(0.4, 0.1), 1);
    u.at({1}) = J(cplx(-0.9, 0.0), 1);
    u.at({2}) = J(cplx(0.2, -0.3), 1);
    u.at({3}) = J(cplx(1.1, 0.6), 1);
    SpinorField spin =
        world_spin_translate(u, 0, TranslateDirection::WorldToSpin, c);
    REQUIRE(spin.rank() == 2);
    SpinorField back =
        world_spin_translate(spin, 0, TranslateDirection::SpinToWorld, c);
    CHECK(max_abs_diff(back, u) < 1e-12);
}

TEST_CASE("slot algebra: contraction, symmetrizer, permutation") {
    SpinorField t(Formalism::Epsilon,
                  {{SlotKind::World, true}, {SlotKind::World, false}}, {}, 1);
    cplx tr = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            t.at({a, b}) = J(cplx(a + 2.0 * b, a * b), 1);
            if (a == b) tr += t.at({a, b}).value();
        }
    SpinorField c = contract(t, 0, 1);
    CHECK(std::abs(c.flat(0).value() - tr) < 1e-14);

    SpinorField q(Formalism::Epsilon,
                  {{SlotKind::Unprimed, false}, {SlotKind::Unprimed, false}},
                  {}, 1);
    q.at({0, 0}) = J(1.0, 1);
    q.at({0, 1}) = J(2.0, 1);
    q.at({1, 0}) = J(5.0, 1);
    q.at({1, 1}) = J(-3.0, 1);
    SpinorField sym = symmetrize(q, {0, 1});
    CHECK(std::abs(sym.at({0, 1}).value() - 3.5) < 1e-14);
    CHECK(std::abs(sym.at({1, 0}).value() - 3.5) < 1e-14);
    SpinorField anti = symmetrize(q, {0, 1}, true);
    CHECK(std::abs(anti.at({0, 1}).value() + 1.5) < 1e-14);
    CHECK(std::abs(anti.at({0, 0}).value()) < 1e-14);
    SpinorField sw = swap_slots(q, 0, 1);
    CHECK(std::abs(sw.at({0, 1}).value() - 5.0) < 1e-14);
}

TEST_CASE("alternating spinor flips sign under pair exchange") {
    SpinMetric m = eps_metric(1);
    SpinorField e = alternating_spinor(m);
    REQUIRE(e.rank() == 8);
    // Exchange (A,A') with (B,B'): total antisymmetry of the world form.
    SpinorField sw = swap_slots(swap_slots(e, 0, 2), 1, 3);
    SpinorField sum = e + sw;
    CHECK(max_abs(sum) < 1e-14);
    // And under (C,C') with (D,D').
    SpinorField sw2 = swap_slots(swap_slots(e, 4, 6), 5, 7);
    CHECK(max_abs(e + sw2) < 1e-14);
}
