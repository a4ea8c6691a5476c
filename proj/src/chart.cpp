#include "spincurv/chart.hpp"

#include <random>
#include <sstream>

#include "spincurv/errors.hpp"

namespace spincurv {

void Chart::validate() const {
    for (int i = 0; i < kDim; ++i)
        if (!(lower[i] < upper[i])) {
            std::ostringstream os;
            os << "chart axis " << coordinate_names[i] << " has empty region ("
               << lower[i] << ", " << upper[i] << ")";
            throw ConfigError(os.str());
        }
}

JetValue JetValue::from_jet(const Jet& j) {
    JetValue v;
    v.order = j.order();
    v.value = j.value();
    if (j.order() >= 1)
        for (int i = 0; i < kDim; ++i) v.first[i] = j.d1(i);
    if (j.order() >= 2)
        for (int i = 0; i < kDim; ++i)
            for (int k = 0; k < kDim; ++k) v.second[i][k] = j.d2(i, k);
    if (j.order() >= 3)
        for (int i = 0; i < kDim; ++i)
            for (int k = 0; k < kDim; ++k)
                for (int l = 0; l < kDim; ++l) v.third[i][k][l] = j.d3(i, k, l);
    return v;
}

std::array<Jet, kDim> seed_jets(const ProbePoint& p, int order) {
    std::array<Jet, kDim> x;
    for (int i = 0; i < kDim; ++i)
        x[i] = Jet::coordinate(p.coords[i], i, order);
    return x;
}

double uniform01(std::uint64_t raw) {
    return double(raw >> 11) * 0x1.0p-53;
}

std::vector<ProbePoint> make_probe_set(const Chart& chart, int count,
                                       std::uint64_t seed) {
    chart.validate();
    if (count < 1) throw ConfigError("probe count must be positive");
    std::mt19937_64 rng(seed);
    std::vector<ProbePoint> pts;
    pts.reserve(count);
    constexpr double margin = 0.05;
    for (int n = 0; n < count; ++n) {
        ProbePoint p;
        for (int i = 0; i < kDim; ++i) {
            double len = chart.upper[i] - chart.lower[i];
            p.coords[i] =
                chart.lower[i] + len * (margin + (1 - 2 * margin) * uniform01(rng()));
        }
        pts.push_back(p);
    }
    return pts;
}

JetValue jet_eval(const ScalarFn& f, const ProbePoint& p, int order) {
    if (order < 1 || order > 3) throw UsageError("jet_eval order must be 1..3");
    Jet j = f(seed_jets(p, order));
    if (!j.finite()) {
        std::ostringstream os;
        os << "function not evaluable at point (" << p.coords[0] << ", "
           << p.coords[1] << ", " << p.coords[2] << ", " << p.coords[3] << ")";
        throw EvaluationError(os.str());
    }
    return JetValue::from_jet(j);
}

}  // namespace spincurv
