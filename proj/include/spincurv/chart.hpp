// spincurv — coordinate charts, probe-point sampling, derivative extraction.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spincurv/jet.hpp"

namespace spincurv {

// An open coordinate box with labelled axes. The engine verifies the metric
// signature (+---) separately when a scenario is evaluated.
struct Chart {
    std::array<std::string, kDim> coordinate_names;
    std::array<double, kDim> lower;  // open interval per axis
    std::array<double, kDim> upper;

    void validate() const;  // throws ConfigError on an empty axis
};

struct ProbePoint {
    std::array<double, kDim> coords;
};

// Derivatives of a scalar function at a point, read off a jet. The `second`
// and `third` blocks are symmetric by construction.
struct JetValue {
    int order = 0;
    cplx value{};
    std::array<cplx, kDim> first{};
    std::array<std::array<cplx, kDim>, kDim> second{};
    std::array<std::array<std::array<cplx, kDim>, kDim>, kDim> third{};

    static JetValue from_jet(const Jet& j);
};

// A scalar function of the chart coordinates, evaluated in jet arithmetic.
// Contract: callers pass *coordinate seed* jets (value + unit first
// derivative per axis). Wrappers may rely on this to rebuild higher-order
// seeds when they internally need one more derivative order.
using ScalarFn = std::function<Jet(const std::array<Jet, kDim>&)>;

// Coordinate seed jets for a point at the given order.
std::array<Jet, kDim> seed_jets(const ProbePoint& p, int order);

// Deterministic uniform sampling strictly inside the chart box, with a 5%
// margin per axis (the sampling contract requires at least 1%).
std::vector<ProbePoint> make_probe_set(const Chart& chart, int count,
                                       std::uint64_t seed);

// Evaluate f at p with exact derivatives to `order` (1..3). Throws
// EvaluationError (carrying the point) if the result is not finite.
JetValue jet_eval(const ScalarFn& f, const ProbePoint& p, int order);

// Deterministic uniform double in [0,1) from a raw 64-bit PRNG draw;
// used instead of std::uniform_real_distribution for cross-library
// reproducibility of reports.
double uniform01(std::uint64_t raw);

}  // namespace spincurv
