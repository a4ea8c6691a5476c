#include "spincurv/scenario.hpp"

#include <cmath>
#include <fstream>
#include <utility>

#include <json.hpp>

#include "spincurv/errors.hpp"
#include "spincurv/expr.hpp"
#include "spincurv/jet_linalg.hpp"

namespace spincurv {

namespace {

ScalarFn constant_fn(double v) {
    return [v](const std::array<Jet, kDim>& x) { return Jet(x[0].order(), v); };
}

ScalarFn zero_fn() { return constant_fn(0.0); }

std::array<ScalarFn, kDim> zero_vector() {
    return {zero_fn(), zero_fn(), zero_fn(), zero_fn()};
}

// Fills metric/tetrad with zeros so catalog builders only set nonzero entries.
void init_blocks(SpacetimeScenario& s) {
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            s.metric[i][j] = zero_fn();
            s.tetrad[i][j] = zero_fn();
        }
    s.gamma_abs = constant_fn(1.0);
    s.gamma_phase = zero_fn();
    s.potential = zero_vector();
}

// Splits "name(param)" into name and optional parameter.
std::pair<std::string, std::optional<double>> split_param(
    const std::string& full) {
    auto open = full.find('(');
    if (open == std::string::npos) return {full, std::nullopt};
    auto close = full.rfind(')');
    if (close == std::string::npos || close < open)
        throw UsageError("malformed catalog name: " + full);
    std::string num = full.substr(open + 1, close - open - 1);
    try {
        return {full.substr(0, open), std::stod(num)};
    } catch (const std::exception&) {
        throw UsageError("malformed catalog parameter: " + full);
    }
}

SpacetimeScenario make_minkowski() {
    SpacetimeScenario s;
    s.name = "minkowski";
    s.chart = {{"t", "x", "y", "z"}, {-1, -1, -1, -1}, {1, 1, 1, 1}};
    init_blocks(s);
    for (int i = 0; i < kDim; ++i) {
        double sgn = i == 0 ? 1.0 : -1.0;
        s.metric[i][i] = constant_fn(sgn);
        s.tetrad[i][i] = constant_fn(1.0);
    }
    return s;
}

// Static spherically symmetric metric diag(A, -1/A, -r^2, -r^2 sin^2 th)
// with the natural diagonal orthonormal tetrad.
void fill_static_spherical(SpacetimeScenario& s, const ScalarFn& A) {
    s.metric[0][0] = A;
    s.metric[1][1] = [A](const std::array<Jet, kDim>& x) {
        return -inverse(A(x));
    };
    s.metric[2][2] = [](const std::array<Jet, kDim>& x) {
        return -(x[1] * x[1]);
    };
    s.metric[3][3] = [](const std::array<Jet, kDim>& x) {
        Jet rs = x[1] * sin(x[2]);
        return -(rs * rs);
    };
    s.tetrad[0][0] = [A](const std::array<Jet, kDim>& x) {
        return inverse(sqrt(A(x)));
    };
    s.tetrad[1][1] = [A](const std::array<Jet, kDim>& x) {
        return sqrt(A(x));
    };
    s.tetrad[2][2] = [](const std::array<Jet, kDim>& x) {
        return inverse(x[1]);
    };
    s.tetrad[3][3] = [](const std::array<Jet, kDim>& x) {
        return inverse(x[1] * sin(x[2]));
    };
}

SpacetimeScenario make_schwarzschild(double M) {
    if (M <= 0) throw UsageError("schwarzschild mass must be positive");
    SpacetimeScenario s;
    s.name = "schwarzschild";
    s.chart = {{"t", "r", "th", "ph"},
               {-1.0, 2.2 * M, 0.4, 0.1},
               {1.0, 10.0 * M, 2.7, 1.2}};
    init_blocks(s);
    ScalarFn A = [M](const std::array<Jet, kDim>& x) {
        return 1.0 - (2.0 * M) * inverse(x[1]);
    };
    fill_static_spherical(s, A);
    s.gamma_abs = [M](const std::array<Jet, kDim>& x) {
        return 1.0 + 0.05 * x[1] * (1.0 / M);
    };
    s.gamma_phase = [](const std::array<Jet, kDim>& x) {
        return 0.3 * cos(x[2]);
    };
    return s;
}

SpacetimeScenario make_de_sitter(double lam) {
    if (lam <= 0) throw UsageError("de_sitter lambda must be positive");
    SpacetimeScenario s;
    s.name = "de_sitter";
    double rmax = 0.8 * std::sqrt(3.0 / lam);
    s.chart = {{"t", "r", "th", "ph"},
               {-1.0, 0.2, 0.4, 0.1},
               {1.0, rmax, 2.7, 1.2}};
    init_blocks(s);
    ScalarFn A = [lam](const std::array<Jet, kDim>& x) {
        return 1.0 - (lam / 3.0) * x[1] * x[1];
    };
    fill_static_spherical(s, A);
    s.lambda = lam;
    s.gamma_abs = [](const std::array<Jet, kDim>& x) {
        return 1.0 + 0.05 * sin(x[1]);
    };
    s.gamma_phase = [](const std::array<Jet, kDim>& x) {
        return 0.3 * cos(x[1]);
    };
    return s;
}

SpacetimeScenario make_frw_conformal() {
    SpacetimeScenario s;
    s.name = "frw_conformal";
    s.chart = {{"eta", "x", "y", "z"},
               {0.5, -1, -1, -1},
               {1.5, 1, 1, 1}};
    init_blocks(s);
    ScalarFn a = [](const std::array<Jet, kDim>& x) {
        return 1.0 + 0.2 * x[0] * x[0];
    };
    for (int i = 0; i < kDim; ++i) {
        double sgn = i == 0 ? 1.0 : -1.0;
        s.metric[i][i] = [a, sgn](const std::array<Jet, kDim>& x) {
            Jet av = a(x);
            return sgn * av * av;
        };
        s.tetrad[i][i] = [a](const std::array<Jet, kDim>& x) {
            return inverse(a(x));
        };
    }
    s.vacuum = false;  // matter-filled cosmology: no Einstein-residual gate
    s.gamma_abs = [](const std::array<Jet, kDim>& x) {
        return 1.0 + 0.05 * x[0];
    };
    s.gamma_phase = [](const std::array<Jet, kDim>& x) {
        return 0.3 * sin(x[1]);
    };
    return s;
}

// Plane-fronted wave ds^2 = H du^2 + 2 du dv - dx^2 - dy^2 with
// H = h(u)(x^2 - y^2); harmonic transverse profile, so vacuum. Null-type
// curvature: Psi != 0 with all polynomial invariants vanishing.
SpacetimeScenario make_pp_wave() {
    SpacetimeScenario s;
    s.name = "pp_wave";
    s.chart = {{"u", "v", "x", "y"},
               {-0.8, -0.8, 0.2, 0.2},
               {0.8, 0.8, 1.0, 1.0}};
    init_blocks(s);
    ScalarFn H = [](const std::array<Jet, kDim>& x) {
        return (1.0 + 0.3 * x[0]) * (x[2] * x[2] - x[3] * x[3]);
    };
    s.metric[0][0] = H;
    s.metric[0][1] = constant_fn(1.0);
    s.metric[1][0] = constant_fn(1.0);
    s.metric[2][2] = constant_fn(-1.0);
    s.metric[3][3] = constant_fn(-1.0);
    // e_0 = d_u + (1-H)/2 d_v, e_1 = d_u - (1+H)/2 d_v, e_2 = d_x, e_3 = d_y
    s.tetrad[0][0] = constant_fn(1.0);
    s.tetrad[0][1] = [H](const std::array<Jet, kDim>& x) {
        return 0.5 * (1.0 - H(x));
    };
    s.tetrad[1][0] = constant_fn(1.0);
    s.tetrad[1][1] = [H](const std::array<Jet, kDim>& x) {
        return -0.5 * (1.0 + H(x));
    };
    s.tetrad[2][2] = constant_fn(1.0);
    s.tetrad[3][3] = constant_fn(1.0);
    s.gamma_abs = [](const std::array<Jet, kDim>& x) {
        return 1.0 + 0.05 * sin(x[0]);
    };
    s.gamma_phase = [](const std::array<Jet, kDim>& x) {
        return 0.3 * cos(x[2]);
    };
    return s;
}

SpacetimeScenario make_coulomb_flat(double q) {
    SpacetimeScenario s;
    s.name = "coulomb_flat";
    s.chart = {{"t", "r", "th", "ph"},
               {-1.0, 0.5, 0.4, 0.1},
               {1.0, 3.0, 2.7, 1.2}};
    init_blocks(s);
    fill_static_spherical(s, constant_fn(1.0));
    s.potential[0] = [q](const std::array<Jet, kDim>& x) {
        return q * inverse(x[1]);
    };
    s.gamma_abs = [](const std::array<Jet, kDim>& x) {
        return 1.0 + 0.05 * sin(x[1]);
    };
    s.gamma_phase = [](const std::array<Jet, kDim>& x) {
        return 0.3 * cos(x[2]);
    };
    return s;
}

}  // namespace

std::vector<GaugeSpec> default_gauges() {
    std::vector<GaugeSpec> g;
    g.push_back({"identity", constant_fn(1.0), constant_fn(0.0)});
    g.push_back({"constant", constant_fn(2.0), constant_fn(0.35)});
    g.push_back({"coordinate",
                 [](const std::array<Jet, kDim>& x) {
                     return exp(0.1 * sin(x[1]));
                 },
                 [](const std::array<Jet, kDim>& x) {
                     return 0.2 * cos(x[2]);
                 }});
    return g;
}

std::vector<std::string> catalog_names() {
    return {"minkowski", "schwarzschild", "de_sitter",
            "frw_conformal", "pp_wave", "coulomb_flat"};
}

SpacetimeScenario catalog_get(const std::string& full) {
    auto [name, param] = split_param(full);
    SpacetimeScenario s;
    if (name == "minkowski")
        s = make_minkowski();
    else if (name == "schwarzschild")
        s = make_schwarzschild(param.value_or(1.0));
    else if (name == "de_sitter")
        s = make_de_sitter(param.value_or(0.3));
    else if (name == "frw_conformal")
        s = make_frw_conformal();
    else if (name == "pp_wave")
        s = make_pp_wave();
    else if (name == "coulomb_flat")
        s = make_coulomb_flat(param.value_or(0.5));
    else
        throw UsageError("unknown catalog scenario: " + name);
    s.gauges = default_gauges();
    validate_scenario(s);
    return s;
}

void validate_scenario(const SpacetimeScenario& s, int count) {
    s.chart.validate();
    auto points = make_probe_set(s.chart, count, s.probe_seed + 17);
    for (const ProbePoint& p : points) {
        auto x = seed_jets(p, 1);
        JetMat<4> g, e;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                g[i][j] = s.metric[i][j](x);
                e[i][j] = s.tetrad[i][j](x);
                if (!g[i][j].finite() || !e[i][j].finite())
                    throw ConfigError(
                        "scenario \"" + s.name +
                        "\": non-finite metric/tetrad at a probe point");
            }
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                if (std::abs(g[i][j].value() - g[j][i].value()) > 1e-12)
                    throw ConfigError("scenario \"" + s.name +
                                      "\": metric not symmetric");
                // eta_{mu nu} = e_mu^a e_nu^b g_ab must be diag(1,-1,-1,-1):
                // this pins both orthonormality and the (+---) signature.
                cplx eta{};
                for (int a = 0; a < kDim; ++a)
                    for (int b = 0; b < kDim; ++b)
                        eta += e[i][a].value() * e[j][b].value() *
                               g[a][b].value();
                double want = i == j ? (i == 0 ? 1.0 : -1.0) : 0.0;
                if (std::abs(eta - want) > 1e-8)
                    throw ConfigError(
                        "scenario \"" + s.name +
                        "\": tetrad does not reproduce a (+---) metric");
            }
        Jet gabs = s.gamma_abs(x);
        if (!gabs.finite() || std::abs(gabs.value()) < 1e-12)
            throw ConfigError("scenario \"" + s.name +
                              "\": gamma function vanishes at a probe point");
    }
}

SpacetimeScenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("scenario JSON parse error in " + path + ": " +
                          e.what());
    }
    try {
        SpacetimeScenario s;
        s.name = j.at("name").get<std::string>();
        const auto& chart = j.at("chart");
        const auto& names = chart.at("names");
        const auto& region = chart.at("region");
        if (names.size() != 4 || region.size() != 4)
            throw ConfigError("chart must have 4 names and 4 regions");
        for (int i = 0; i < kDim; ++i) {
            s.chart.coordinate_names[i] = names[i].get<std::string>();
            s.chart.lower[i] = region[i].at(0).get<double>();
            s.chart.upper[i] = region[i].at(1).get<double>();
        }
        const auto& cn = s.chart.coordinate_names;
        init_blocks(s);
        const auto& metric = j.at("metric");
        const auto& tetrad = j.at("tetrad");
        for (int i = 0; i < kDim; ++i)
            for (int k = 0; k < kDim; ++k) {
                s.metric[i][k] =
                    compile_expression(metric.at(i).at(k).get<std::string>(), cn);
                s.tetrad[i][k] =
                    compile_expression(tetrad.at(i).at(k).get<std::string>(), cn);
            }
        if (j.contains("gamma")) {
            s.gamma_abs =
                compile_expression(j["gamma"].at("abs").get<std::string>(), cn);
            s.gamma_phase = compile_expression(
                j["gamma"].at("phase").get<std::string>(), cn);
        }
        if (j.contains("potential"))
            for (int i = 0; i < kDim; ++i)
                s.potential[i] =
                    compile_expression(j["potential"].at(i).get<std::string>(), cn);
        if (j.contains("log_E"))
            s.log_E = compile_expression(j["log_E"].get<std::string>(), cn);
        s.lambda = j.value("lambda", 0.0);
        s.kappa = j.value("kappa", 1.0);
        s.vacuum = j.value("vacuum", true);
        if (j.contains("probes")) {
            s.probe_count = j["probes"].value("count", 20);
            s.probe_seed = j["probes"].value("seed", std::uint64_t{1});
        }
        if (j.contains("gauges")) {
            int n = 0;
            for (const auto& gj : j["gauges"]) {
                GaugeSpec gs;
                gs.label = "file-gauge-" + std::to_string(n++);
                gs.rho = compile_expression(gj.at("rho").get<std::string>(), cn);
                gs.lambda =
                    compile_expression(gj.at("lambda").get<std::string>(), cn);
                s.gauges.push_back(std::move(gs));
            }
        } else {
            s.gauges = default_gauges();
        }
        validate_scenario(s);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("scenario schema error in " + path + ": " + e.what());
    }
}

}  // namespace spincurv
