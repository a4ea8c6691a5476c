#include "spincurv/gauge.hpp"

namespace spincurv {

namespace {

// Seeds at the same point, one order higher, for exact gradients of gauge
// functions inside ScalarFn wrappers (see the coordinate-seed contract).
std::array<Jet, kDim> lifted_seeds(const std::array<Jet, kDim>& x) {
    int order = x[0].order();
    if (order + 1 > kMaxOrder)
        throw UsageError(
            "gauged scenario needs one spare jet order (metric order <= 3)");
    std::array<Jet, kDim> h;
    for (int i = 0; i < kDim; ++i)
        h[i] = Jet::coordinate(x[i].value().real(), i, order + 1);
    return h;
}

}  // namespace

GaugePoint eval_gauge(const GaugeSpec& spec, const std::array<Jet, kDim>& x) {
    GaugePoint g;
    Jet rho = spec.rho(x);
    Jet lam = spec.lambda(x);
    if (rho.value().real() <= 0.0)
        throw ConfigError("gauge element requires rho > 0");
    g.delta = rho * exp(cplx(0, 2) * lam);
    g.lam = sqrt(rho) * exp(cplx(0, 1) * lam);
    Jet log_delta = log(rho) + cplx(0, 2) * lam;
    Jet log_rho = log(rho);
    for (int a = 0; a < kDim; ++a) {
        g.dlog_delta[a] = log_delta.derivative(a);
        g.dlambda[a] = lam.derivative(a);
        g.dlog_rho[a] = log_rho.derivative(a);
    }
    return g;
}

SpinorField apply_gauge(const SpinorField& f, const GaugePoint& g) {
    int up_unprimed = 0, up_primed = 0;
    for (const Slot& s : f.slots()) {
        if (s.kind == SlotKind::Unprimed) up_unprimed += s.up ? 1 : -1;
        if (s.kind == SlotKind::Primed) up_primed += s.up ? 1 : -1;
    }
    // lam^{-(net up unprimed)} conj(lam)^{-(net up primed)} times the
    // density-weight factors.
    Jet factor(f.jet_order(), 1.0);
    factor = factor * pow(g.lam, -double(up_unprimed)) *
             pow(conj(g.lam), -double(up_primed));
    const DensityWeight& dw = f.dweight();
    if (!dw.weight.is_zero())
        factor = factor * pow(g.delta, dw.weight.to_double());
    if (!dw.antiweight.is_zero())
        factor = factor * pow(conj(g.delta), dw.antiweight.to_double());
    if (!dw.absolute_weight.is_zero())
        factor = factor * pow(abs_jet(g.delta), dw.absolute_weight.to_double());
    return scale(f, factor);
}

SpinorField gauge_affinity(const SpinorField& aff, const GaugePoint& g) {
    SpinorField r = aff;
    for (int a = 0; a < kDim; ++a) {
        Jet shift = 0.5 * g.dlog_delta[a].truncated(aff.jet_order());
        for (int B = 0; B < 2; ++B) r.at({a, B, B}) += shift;
    }
    return r;
}

SpinorField gauge_affinity_long(const SpinorField& aff, const GaugePoint& g) {
    // L = lam * id; A' = (d_a L + L A_a) L^{-1} componentwise.
    SpinorField r = aff;
    Jet lam_inv = inverse(g.lam);
    for (int a = 0; a < kDim; ++a) {
        Jet dlam = g.lam.derivative(a);
        for (int B = 0; B < 2; ++B)
            for (int C = 0; C < 2; ++C) {
                Jet v = g.lam.truncated(aff.jet_order()) * aff.at({a, B, C});
                if (B == C) v += dlam.truncated(aff.jet_order());
                r.at({a, B, C}) = v * lam_inv.truncated(aff.jet_order());
            }
    }
    return r;
}

SpacetimeScenario gauged_scenario(const SpacetimeScenario& s,
                                  const GaugeSpec& spec) {
    SpacetimeScenario out = s;
    out.name = s.name + "+" + spec.label;
    ScalarFn rho = spec.rho, lam = spec.lambda;
    ScalarFn abs0 = s.gamma_abs, phase0 = s.gamma_phase;
    out.gamma_abs = [abs0, rho](const std::array<Jet, kDim>& x) {
        return abs0(x) * rho(x);
    };
    out.gamma_phase = [phase0, lam](const std::array<Jet, kDim>& x) {
        return phase0(x) + 2.0 * lam(x);
    };
    for (int a = 0; a < kDim; ++a) {
        ScalarFn pot0 = s.potential[a];
        out.potential[a] = [pot0, lam, a](const std::array<Jet, kDim>& x) {
            return pot0(x) - lam(lifted_seeds(x)).derivative(a);
        };
    }
    std::optional<ScalarFn> logE0 = s.log_E;
    out.log_E = [logE0, rho](const std::array<Jet, kDim>& x) {
        Jet base = logE0 ? (*logE0)(x) : Jet(x[0].order());
        return base + log(rho(x));
    };
    return out;
}

}  // namespace spincurv
