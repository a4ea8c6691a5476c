#include "spincurv/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "spincurv/curvature.hpp"
#include "spincurv/errors.hpp"
#include "spincurv/gauge.hpp"
#include "spincurv/wave.hpp"

namespace spincurv {

namespace {

const char* form_name(Formalism f) {
    return f == Formalism::Gamma ? "gamma" : "epsilon";
}

// Uniform double in [-1, 1) straight from the engine bits, so streams are
// identical across standard libraries.
double uniform(std::mt19937_64& gen) {
    return 2.0 * ((gen() >> 11) * 0x1.0p-53) - 1.0;
}

struct Ctx {
    const SpacetimeScenario& s;
    SuiteReport& rep;
    double tol_scale;
    std::uint64_t seed;
    Formalism form = Formalism::Epsilon;

    void add(const std::string& id, const std::string& tag, double tol,
             const std::function<double()>& eval, bool with_form = true) {
        CheckResult c;
        c.check_id = with_form ? id + "." + form_name(form) : id;
        c.tag = tag;
        c.tolerance = tol * tol_scale;
        try {
            c.residual = eval();
            c.pass = std::isfinite(c.residual) && c.residual <= c.tolerance;
        } catch (const std::exception& e) {
            c.residual = std::numeric_limits<double>::infinity();
            c.pass = false;
            c.error = e.what();
        }
        rep.checks.push_back(std::move(c));
    }

    std::vector<ProbePoint> probes(int n, std::uint64_t salt) const {
        return make_probe_set(s.chart, n, seed + salt);
    }

    SpinorField random_field(const GeometryPoint& G, std::vector<Slot> slots,
                             std::uint64_t salt,
                             DensityWeight dw = {}) const {
        std::mt19937_64 gen(seed * 0x9e3779b97f4a7c15ull + salt);
        SpinorField f(G.form, slots, dw, G.order);
        for (int i = 0; i < f.size(); ++i) {
            // analytic in the coordinates so repeated derivatives are exact
            double a = uniform(gen), b = uniform(gen), c = uniform(gen);
            f.flat(i) = a * sin(G.x[1] + b) * cos(G.x[2]) +
                        cplx(0.3 * c, 0.2 * a) * G.x[0] * G.x[3] +
                        cplx(1.0 + 0.5 * b, -0.4 * c);
        }
        return f;
    }
};

double worst(double a, double b) { return std::max(a, b); }

// ---------------------------------------------------------------- algebra --

void suite_algebra(Ctx& c) {
    ProbePoint p = c.probes(1, 101)[0];
    GeometryPoint G = make_geometry(c.s, p, c.form, 2);

    c.add("algebra.metric-normalization",
          "full contraction of the metric spinor with its inverse equals 2",
          1e-12, [&] {
              SpinorField t = contract(outer(G.metric.up, G.metric.lo), 0, 2);
              t = contract(t, 0, 1);
              return std::abs(t.flat(0).value() - 2.0);
          });

    c.add("algebra.metric-antisymmetry",
          "the metric spinor has no symmetric part", 1e-12,
          [&] { return max_abs(symmetrize(G.metric.lo, {0, 1})); });

    c.add("algebra.raise-lower-roundtrip",
          "raising then lowering a spinor slot is the identity", 1e-12, [&] {
              SpinorField v =
                  c.random_field(G, {{SlotKind::Unprimed, false}}, 7);
              SpinorField w = adjust_index(
                  adjust_index(v, 0, IndexDirection::Raise, G.metric), 0,
                  IndexDirection::Lower, G.metric);
              return max_abs_diff(v, w);
          });

    c.add("algebra.connecting-metric",
          "connecting objects contracted over spin slots give the metric",
          1e-10, [&] {
              SpinorField t =
                  contract(outer(G.conn.lo_up, G.conn.lo_lo), 1, 4);
              t = contract(t, 1, 3);
              return max_abs_diff(t, metric_field(G));
          });

    c.add("algebra.connecting-sym-pair",
          "the unprimed-symmetrized mixed connecting contraction vanishes",
          1e-10, [&] {
              SpinorField a = adjust_index(G.conn.up_up, 2,
                                           IndexDirection::Lower, G.metric);
              SpinorField t = contract(outer(a, G.conn.lo_up), 0, 3);
              t = contract(t, 3, 1);
              return max_abs(symmetrize(t, {0, 1}));
          });

    c.add("algebra.vector-pair-identity",
          "spinor square of a world vector is half its norm times the mixed "
          "delta",
          1e-10, [&] {
              std::mt19937_64 gen(c.seed + 11);
              SpinorField pl(c.form, {{SlotKind::World, false}}, {}, G.order);
              for (int a = 0; a < kDim; ++a)
                  pl.at({a}) = Jet(G.order, uniform(gen));
              SpinorField pu = world_adjust(pl, 0, IndexDirection::Raise, G);
              cplx p2 = contract(outer(pu, pl), 0, 1).flat(0).value();
              SpinorField ps = world_spin_translate(
                  pl, 0, TranslateDirection::WorldToSpin, G.conn);
              SpinorField qs = world_spin_translate(
                  pu, 0, TranslateDirection::WorldToSpin, G.conn);
              SpinorField t = contract(outer(ps, qs), 3, 1);  // (A dn, B up)
              double m = 0;
              for (int A = 0; A < 2; ++A)
                  for (int B = 0; B < 2; ++B) {
                      cplx want = A == B ? 0.5 * p2 : 0.0;
                      m = worst(m, std::abs(t.at({A, B}).value() - want));
                  }
              return m;
          });

    c.add("algebra.world-spin-roundtrip",
          "translating a world slot to spin form and back is the identity",
          1e-10, [&] {
              SpinorField v = c.random_field(G, {{SlotKind::World, true}}, 13);
              SpinorField w = world_spin_translate(
                  v, 0, TranslateDirection::WorldToSpin, G.conn);
              w = world_spin_translate(w, 0, TranslateDirection::SpinToWorld,
                                       G.conn);
              return max_abs_diff(v, w);
          });
}

// ------------------------------------------------------------- connection --

void suite_connection(Ctx& c) {
    ProbePoint p = c.probes(1, 211)[0];
    GeometryPoint G = make_geometry(c.s, p, c.form, 2);

    c.add("connection.metric-constancy",
          "covariant derivative of the world metric vanishes", 1e-9, [&] {
              return worst(
                  max_abs(covariant_derivative(metric_field(G), G)),
                  max_abs(covariant_derivative(inverse_metric_field(G), G)));
          });

    c.add("connection.connecting-constancy",
          "covariant derivative of the connecting objects vanishes", 1e-9,
          [&] {
              double m = max_abs(covariant_derivative(G.conn.lo_up, G));
              m = worst(m, max_abs(covariant_derivative(G.conn.up_lo, G)));
              m = worst(m, max_abs(covariant_derivative(G.conn.lo_lo, G)));
              return worst(m, max_abs(covariant_derivative(G.conn.up_up, G)));
          });

    if (c.form == Formalism::Gamma) {
        c.add("connection.metric-spinor-law",
              "the metric spinor derivative is its eigenvalue law", 1e-9,
              [&] {
                  SpinorField lhs = covariant_derivative(G.metric.lo, G);
                  SpinorField rhs(c.form, lhs.slots(), {}, lhs.jet_order());
                  for (int a = 0; a < kDim; ++a) {
                      Jet ev = cplx(0, 1) *
                               (G.phase_grad[a] +
                                2.0 * G.phi_pot[a].truncated(G.order - 1));
                      for (int B = 0; B < 2; ++B)
                          for (int C = 0; C < 2; ++C)
                              rhs.at({a, B, C}) = ev * G.metric.lo.at({B, C});
                  }
                  return max_abs_diff(lhs, rhs);
              });
        c.add("connection.modulus-constancy",
              "the metric-spinor modulus is covariantly constant", 1e-10,
              [&] {
                  SpinorField mod =
                      scalar_field(c.form, abs_jet(G.gamma),
                                   {.weight = 0,
                                    .antiweight = 0,
                                    .absolute_weight = 1,
                                    .world_weight = 0});
                  return max_abs(covariant_derivative(mod, G));
              });
    } else {
        c.add("connection.metric-spinor-constancy",
              "the alternating metric spinor is covariantly constant", 1e-10,
              [&] {
                  return worst(
                      max_abs(covariant_derivative(G.metric.lo, G)),
                      max_abs(covariant_derivative(G.metric.up, G)));
              });
    }

    c.add("connection.volume-density-constancy",
          "sqrt(-g) with unit world weight is covariantly constant", 1e-10,
          [&] {
              SpinorField vol = scalar_field(c.form, G.sqrt_neg_g,
                                             {.weight = 0,
                                              .antiweight = 0,
                                              .absolute_weight = 0,
                                              .world_weight = 1});
              return max_abs(covariant_derivative(vol, G));
          });

    c.add("connection.affinity-trace",
          "the contracted affinity matches the stored trace field", 1e-11,
          [&] { return max_abs_diff(contract(G.aff, 2, 1), G.aff_trace); });

    c.add("connection.leibniz", "the derivative distributes over products",
          1e-10, [&] {
              SpinorField a = c.random_field(
                  G, {}, 17,
                  {.weight = {1, 2}, .antiweight = {-1, 3},
                   .absolute_weight = 0, .world_weight = 0});
              SpinorField z =
                  c.random_field(G, {{SlotKind::Unprimed, true}}, 19);
              SpinorField lhs = covariant_derivative(outer(a, z), G);
              SpinorField rhs = outer(covariant_derivative(a, G), z);
              rhs += outer(a, covariant_derivative(z, G));
              return max_abs_diff(lhs, rhs);
          });

    c.add("connection.contracted-scalar",
          "a full spinor contraction differentiates like a plain scalar",
          1e-10, [&] {
              SpinorField z =
                  c.random_field(G, {{SlotKind::Unprimed, true}}, 23);
              SpinorField x =
                  c.random_field(G, {{SlotKind::Unprimed, false}}, 29);
              SpinorField sc = contract(outer(z, x), 0, 1);
              return max_abs_diff(covariant_derivative(sc, G),
                                  partial_derivative_field(sc));
          });
}

// -------------------------------------------------------------- curvature --

void suite_curvature(Ctx& c) {
    ProbePoint p = c.probes(1, 307)[0];
    GeometryPoint G = make_geometry(c.s, p, c.form, 3);
    CurvatureBundle C = make_curvature(G);

    c.add("curvature.trace-field-strength",
          "the spin-curvature trace is -2i times the field strength", 1e-10,
          [&] {
              return max_abs_diff(contract(C.W, 3, 2),
                                  scale(C.F, cplx(0, -2)));
          });

    c.add("curvature.bivector-link",
          "the lowered spin curvature reassembles from Riemann and the field "
          "strength",
          1e-9, [&] {
              SpinorField s_pr = adjust_index(G.conn.up_lo, 2,
                                              IndexDirection::Raise, G.metric);
              SpinorField t = contract(outer(G.conn.up_lo, s_pr), 5, 2);
              SpinorField u = contract(outer(t, C.riemann_lo), 0, 6);
              u = contract(u, 1, 5);
              SpinorField rhs = scale(permuted(u, {2, 3, 0, 1}), cplx(0.5));
              SpinorField em = outer(C.F, G.metric.lo);
              rhs.dweight() = em.dweight();
              rhs -= scale(em, cplx(0, 1));
              return max_abs_diff(C.W_lo, rhs);
          });

    c.add("curvature.riemann-roundtrip",
          "the Riemann tensor round-trips through the curvature spinors",
          1e-8, [&] {
              const SpinMetric& m = G.metric;
              SpinorField t1 =
                  permuted(outer(outer(m.lo_bar, m.lo_bar), C.X),
                           {4, 0, 5, 1, 6, 2, 7, 3});
              SpinorField t2 = permuted(outer(outer(m.lo, m.lo_bar), C.Xi),
                                        {0, 5, 1, 7, 4, 2, 6, 3});
              SpinorField sum = t1 + t2;
              SpinorField cc = conjugate_field(sum);
              for (int k = 0; k < 4; ++k) cc = swap_slots(cc, 2 * k, 2 * k + 1);
              cc.dweight() = sum.dweight();
              sum += cc;
              for (int k = 0; k < 4; ++k)
                  sum = world_spin_translate(
                      sum, k, TranslateDirection::SpinToWorld, G.conn);
              // unit floor: relative for large curvatures, absolute when
              // the tensor itself vanishes
              return rel_diff(sum, C.riemann_lo, 1.0);
          });

    c.add("curvature.chi-real", "the scalar curvature spinor trace is real",
          1e-10, [&] { return std::abs(C.chi.value().imag()); });

    c.add("curvature.scalar-link",
          "the world curvature scalar equals eight times the spinor trace",
          1e-9, [&] {
              return std::abs(C.ricci_scalar.value() -
                              8.0 * C.chi.value().real());
          });

    c.add("curvature.ricci-decomposition",
          "the spinor Ricci tensor splits into trace and trace-free parts",
          1e-8, [&] {
              SpinorField r = all_world_to_spin(C.ricci, G.conn);
              SpinorField mm = permuted(outer(G.metric.lo, G.metric.lo_bar),
                                        {0, 2, 1, 3});
              SpinorField want =
                  scale(mm, 2.0 * C.chi.truncated(mm.jet_order()));
              want.dweight() = C.Xi.dweight();
              want -= scale(C.Xi, cplx(2));
              return rel_diff(r, want, 1.0);
          });

    c.add("curvature.commutator-random",
          "second derivatives of constant-by-construction objects commute",
          1e-9, [&] {
              SpinorField dd = covariant_derivative(
                  covariant_derivative(G.conn.up_up, G), G);
              return max_abs(dd - swap_slots(dd, 0, 1));
          });

    if (c.s.vacuum)
        c.add("curvature.einstein-residual",
              "the Ricci tensor equals lambda times the metric (vacuum)",
              1e-9, [&] {
                  double m = 0;
                  for (int a = 0; a < kDim; ++a)
                      for (int b = 0; b < kDim; ++b)
                          m = worst(m, std::abs(C.ricci.at({a, b}).value() -
                                                c.s.lambda *
                                                    G.g[a][b].value()));
                  return m;
              });
}

// ------------------------------------------------------------------ gauge --

void suite_gauge(Ctx& c) {
    ProbePoint p = c.probes(1, 401)[0];
    GeometryPoint G = make_geometry(c.s, p, c.form, 3);
    CurvatureBundle C = make_curvature(G);
    int n = 0;
    for (const GaugeSpec& spec : c.s.gauges) {
        std::string id = "gauge." + (spec.label.empty()
                                         ? "g" + std::to_string(n)
                                         : spec.label);
        ++n;
        GaugePoint gp = eval_gauge(spec, G.x);
        SpacetimeScenario sg = gauged_scenario(c.s, spec);
        GeometryPoint GA = make_geometry(sg, p, c.form, 3);
        CurvatureBundle CA = make_curvature(GA);

        c.add(id + ".metric-two-path",
              "object law and input rewriting agree on the metric spinor",
              1e-9, [&] {
                  return max_abs_diff(apply_gauge(G.metric.lo, gp),
                                      GA.metric.lo);
              });
        c.add(id + ".affinity-two-path",
              "the inhomogeneous affinity law matches the rebuilt affinity",
              1e-9, [&] {
                  return max_abs_diff(gauge_affinity(G.aff, gp), GA.aff);
              });
        c.add(id + ".curvature-two-path",
              "the lowered spin curvature transforms tensorially", 1e-9,
              [&] { return max_abs_diff(apply_gauge(C.W_lo, gp), CA.W_lo); });
        c.add(id + ".chi-invariant",
              "the scalar curvature spinor trace is gauge invariant", 1e-10,
              [&] { return std::abs(C.chi.value() - CA.chi.value()); });
        c.add(id + ".phi-invariant",
              "the mixed electromagnetic spinor is gauge invariant", 1e-10,
              [&] {
                  SpinorField a = adjust_index(C.phi_em, 1,
                                               IndexDirection::Raise,
                                               G.metric);
                  SpinorField b = adjust_index(CA.phi_em, 1,
                                               IndexDirection::Raise,
                                               GA.metric);
                  return max_abs_diff(a, b);
              });
    }
}

// ------------------------------------------------------------------- wave --

void suite_wave(Ctx& c) {
    ProbePoint p = c.probes(1, 503)[0];
    GeometryPoint G4 = make_geometry(c.s, p, c.form, 4);
    CurvatureBundle C4 = make_curvature(G4);

    c.add("wave.maxwell",
          "first-order equation for the electromagnetic spinor", 1e-8,
          [&] { return max_abs(maxwell_residual(C4, G4)); });

    c.add("wave.photon", "second-order equation for the electromagnetic "
                         "spinor with curvature coupling",
          1e-8, [&] { return max_abs(photon_wave_residual(C4, G4)); });

    c.add("wave.potential",
          "second-order equation for the electromagnetic potential", 1e-8,
          [&] { return max_abs(potential_wave_residual(C4, G4)); });

    c.add("wave.potential-world",
          "world-form potential identity against the field-strength "
          "divergence",
          1e-9, [&] { return max_abs(potential_world_residual(C4, G4)); });

    c.add("wave.bianchi",
          "contracted derivative of the trace-free spinor ties to the scalar "
          "gradient",
          1e-8, [&] { return max_abs(bianchi_contracted_residual(C4, G4)); });

    if (c.s.vacuum) {
        c.add("wave.graviton-divergence",
              "first-order equation for the gravitational spinor", 1e-8,
              [&] {
                  double scale = std::max(
                      1.0, max_abs(spin_gradient(C4.Psi, G4)));
                  return max_abs(graviton_divergence_residual(C4, G4)) /
                         scale;
              });
        c.add("wave.graviton",
              "second-order equation for the gravitational spinor "
              "(relative)",
              1e-7, [&] {
                  double scale =
                      std::max(1.0, max_abs(box_field(C4.Psi, G4)));
                  return max_abs(graviton_wave_residual(C4, G4)) / scale;
              });
        if (c.form == Formalism::Gamma)
            c.add("wave.graviton-interchange",
                  "raising all slots conjugates the drift and gauge scalar",
                  1e-10, [&] {
                      SpinorField up = graviton_wave_residual(C4, G4);
                      for (int k = 0; k < 4; ++k)
                          up = adjust_index(up, k, IndexDirection::Raise,
                                            G4.metric);
                      return max_abs_diff(
                          graviton_wave_residual_contra(C4, G4), up);
                  });
    }

    if (c.form == Formalism::Gamma)
        c.add("wave.gauge-scalars",
              "the wave-equation gauge scalars are invariant under the gauge "
              "group",
              1e-9, [&] {
                  GeometryPoint G3 = make_geometry(c.s, p, c.form, 3);
                  double m = 0;
                  for (const GaugeSpec& spec : c.s.gauges) {
                      GeometryPoint GA = make_geometry(
                          gauged_scenario(c.s, spec), p, c.form, 3);
                      m = worst(m, std::abs(upsilon_P(GA).value() -
                                            upsilon_P(G3).value()));
                      m = worst(m, std::abs(upsilon_G(GA).value() -
                                            upsilon_G(G3).value()));
                  }
                  return m;
              });

    // Plane-wave spinor pair checks apply on flat scenarios with a trivial
    // connection only (where the pair is an exact solution).
    GeometryPoint G2 = make_geometry(c.s, p, c.form, 2);
    if (max_abs(C4.riemann) < 1e-12 && max_abs(G2.aff) < 1e-12) {
        c.add("wave.dirac-first-order",
              "the plane-wave pair solves the coupled first-order system",
              1e-10, [&] {
                  DiracPair d = make_plane_wave_pair(G2, 1.3, 0.7,
                                                     {1.0, cplx(0.3, 0.2)});
                  auto [r1, r2] = dirac_first_order_residual(d, G2);
                  return worst(max_abs(r1), max_abs(r2));
              });
        c.add("wave.dirac-wave",
              "the plane-wave pair solves the second-order equation", 1e-9,
              [&] {
                  DiracPair d = make_plane_wave_pair(G2, 1.3, 0.7,
                                                     {1.0, cplx(0.3, 0.2)});
                  return max_abs(dirac_wave_residual(d, C4, G2));
              });
    }
}

// ------------------------------------------------------------------ limit --

void suite_limit(Ctx& c) {
    ProbePoint p = c.probes(1, 601)[0];
    GeometryPoint Gg = make_geometry(c.s, p, Formalism::Gamma, 3);
    GeometryPoint Ge = make_geometry(c.s, p, Formalism::Epsilon, 3);
    CurvatureBundle Cg = make_curvature(Gg);
    CurvatureBundle Ce = make_curvature(Ge);
    const Jet& gm = Gg.gamma;
    Jet ab2 = abs_jet(gm) * abs_jet(gm);

    auto sym_aff = [](const GeometryPoint& G) {
        return symmetrize(
            adjust_index(G.aff, 2, IndexDirection::Lower, G.metric), {1, 2});
    };

    c.add("limit.sym-affinity",
          "symmetric affinity parts differ by the metric-spinor function",
          1e-10,
          [&] {
              return max_abs_diff(sym_aff(Gg), scale(sym_aff(Ge), gm));
          },
          false);

    c.add("limit.mixed-curvature",
          "the mixed spin curvatures of the two formalisms coincide", 1e-9,
          [&] { return max_abs_diff(Cg.W, Ce.W); }, false);

    c.add("limit.curvature-spinor",
          "the unprimed curvature spinors differ by the squared function",
          1e-9,
          [&] { return max_abs_diff(Cg.omega, scale(Ce.omega, gm * gm)); },
          false);

    c.add("limit.mixed-pair-spinor",
          "the mixed-pair curvature spinors differ by the squared modulus",
          1e-9,
          [&] { return max_abs_diff(Cg.omega_p, scale(Ce.omega_p, ab2)); },
          false);

    c.add("limit.chi-equality",
          "the scalar curvature spinor traces are equal", 1e-10,
          [&] { return std::abs(Cg.chi.value() - Ce.chi.value()); }, false);

    c.add("limit.spinor-riemann",
          "the spinor-indexed Riemann tensors differ by the fourth power of "
          "the modulus",
          1e-9,
          [&] {
              SpinorField rg = all_world_to_spin(Cg.riemann_lo, Gg.conn);
              SpinorField re = all_world_to_spin(Ce.riemann_lo, Ge.conn);
              return max_abs_diff(rg, scale(re, ab2 * ab2));
          },
          false);

    // degeneration ladder: contract the metric-spinor data toward (1, 0)
    auto shrunk = [&](double delta) {
        SpacetimeScenario s = c.s;
        ScalarFn abs0 = c.s.gamma_abs, ph0 = c.s.gamma_phase;
        s.gamma_abs = [abs0, delta](const std::array<Jet, kDim>& x) {
            return 1.0 + delta * (abs0(x) - 1.0);
        };
        s.gamma_phase = [ph0, delta](const std::array<Jet, kDim>& x) {
            return delta * ph0(x);
        };
        return s;
    };

    c.add("limit.degenerate-agreement",
          "with unit metric-spinor data the formalisms agree exactly", 1e-10,
          [&] {
              GeometryPoint G0 =
                  make_geometry(shrunk(0.0), p, Formalism::Gamma, 3);
              CurvatureBundle C0 = make_curvature(G0);
              return worst(max_abs_diff(G0.aff, Ge.aff),
                           max_abs_diff(C0.omega, Ce.omega));
          },
          false);

    c.add("limit.ladder-order",
          "the formalism discrepancy shrinks at first order or better "
          "(reported as 1 minus the observed order, clamped at 0)",
          0.05,
          [&] {
              std::array<double, 3> deltas{1e-1, 1e-2, 1e-3};
              std::array<double, 3> err{};
              for (int k = 0; k < 3; ++k) {
                  GeometryPoint G = make_geometry(shrunk(deltas[k]), p,
                                                  Formalism::Gamma, 3);
                  err[k] = worst(max_abs_diff(G.aff, Ge.aff),
                                 max_abs_diff(make_curvature(G).omega,
                                              Ce.omega));
              }
              if (err[0] < 1e-13) return 0.0;  // data already degenerate
              double order = std::min(std::log10(err[0] / err[1]),
                                      std::log10(err[1] / err[2]));
              return std::max(0.0, 1.0 - order);
          },
          false);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "algebra", "connection", "curvature", "gauge",
        "wave",    "limit",      "all"};
    return names;
}

SuiteReport run_suite(const SpacetimeScenario& s, const SuiteOptions& opt) {
    if (std::find(suite_names().begin(), suite_names().end(), opt.suite) ==
        suite_names().end())
        throw UsageError("unknown suite: " + opt.suite);
    std::vector<Formalism> forms;
    if (opt.formalism == "gamma")
        forms = {Formalism::Gamma};
    else if (opt.formalism == "epsilon")
        forms = {Formalism::Epsilon};
    else if (opt.formalism == "both")
        forms = {Formalism::Gamma, Formalism::Epsilon};
    else
        throw UsageError("unknown formalism: " + opt.formalism);

    SuiteReport rep;
    rep.scenario = s.name;
    rep.suite = opt.suite;
    rep.formalism = opt.formalism;
    rep.seed = opt.seed;
    rep.tol_scale = opt.tol_scale;

    Ctx c{s, rep, opt.tol_scale, opt.seed};
    auto want = [&](const char* name) {
        return opt.suite == name || opt.suite == "all";
    };
    for (Formalism f : forms) {
        c.form = f;
        if (want("algebra")) suite_algebra(c);
        if (want("connection")) suite_connection(c);
        if (want("curvature")) suite_curvature(c);
        if (want("gauge")) suite_gauge(c);
        if (want("wave")) suite_wave(c);
    }
    // the limit suite compares the formalisms, so it runs exactly once
    if (want("limit")) suite_limit(c);
    return rep;
}

}  // namespace spincurv
