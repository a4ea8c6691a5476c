#include "spincurv/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace spincurv {

namespace {
int encode(const std::array<std::uint8_t, kDim>& m) {
    return m[0] + 5 * (m[1] + 5 * (m[2] + 5 * m[3]));
}
}  // namespace

JetTables::JetTables() {
    lookup.fill(-1);
    int idx = 0;
    offsets[0] = 0;
    for (int d = 0; d <= kMaxOrder; ++d) {
        // lexicographic enumeration of multi-indices of total degree d
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b)
                for (int c = d - a - b; c >= 0; --c) {
                    int e = d - a - b - c;
                    std::array<std::uint8_t, kDim> m{
                        (std::uint8_t)a, (std::uint8_t)b, (std::uint8_t)c,
                        (std::uint8_t)e};
                    multi[idx] = m;
                    degree[idx] = (std::uint8_t)d;
                    double f = 1;
                    for (int v = 0; v < kDim; ++v)
                        for (int k = 2; k <= m[v]; ++k) f *= k;
                    factorial[idx] = f;
                    lookup[encode(m)] = idx;
                    ++idx;
                }
        offsets[d + 1] = idx;
    }
}

const JetTables& JetTables::instance() {
    static const JetTables t;
    return t;
}

int JetTables::index_of(const std::array<std::uint8_t, kDim>& m) const {
    return lookup[encode(m)];
}

Jet Jet::coordinate(double v, int axis, int order) {
    Jet j(order, v);
    if (order >= 1) {
        std::array<std::uint8_t, kDim> m{};
        m[axis] = 1;
        j.c_[JetTables::instance().index_of(m)] = 1.0;
    }
    return j;
}

int Jet::terms() const { return JetTables::instance().offsets[order_ + 1]; }

Jet Jet::truncated(int order) const {
    Jet r(order);
    const auto& t = JetTables::instance();
    int n = t.offsets[std::min(order, order_) + 1];
    for (int i = 0; i < n; ++i) r.c_[i] = c_[i];
    return r;
}

cplx Jet::d1(int i) const {
    std::array<std::uint8_t, kDim> m{};
    m[i] = 1;
    return c_[JetTables::instance().index_of(m)];
}

cplx Jet::d2(int i, int j) const {
    std::array<std::uint8_t, kDim> m{};
    ++m[i];
    ++m[j];
    const auto& t = JetTables::instance();
    int k = t.index_of(m);
    return c_[k] * t.factorial[k];
}

cplx Jet::d3(int i, int j, int k) const {
    std::array<std::uint8_t, kDim> m{};
    ++m[i];
    ++m[j];
    ++m[k];
    const auto& t = JetTables::instance();
    int n = t.index_of(m);
    return c_[n] * t.factorial[n];
}

Jet Jet::derivative(int axis) const {
    if (order_ == 0) throw std::logic_error("jet order too low for derivative");
    const auto& t = JetTables::instance();
    Jet r(order_ - 1);
    for (int i = 0; i < t.offsets[order_]; ++i) {
        auto m = t.multi[i];
        ++m[axis];
        r.c_[i] = c_[t.index_of(m)] * double(m[axis]);
    }
    return r;
}

bool Jet::finite() const {
    for (int i = 0; i < terms(); ++i)
        if (!std::isfinite(c_[i].real()) || !std::isfinite(c_[i].imag()))
            return false;
    return true;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (int i = 0; i < r.terms(); ++i) r.c_[i] = -r.c_[i];
    return r;
}

// Mixed-order combinations truncate to the lower order: the higher-order
// coefficients of the other operand are not meaningful for the result.
Jet& Jet::operator+=(const Jet& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int i = 0; i < terms(); ++i) c_[i] += o.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int i = 0; i < terms(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Jet& Jet::operator*=(cplx s) {
    for (int i = 0; i < terms(); ++i) c_[i] *= s;
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    const auto& t = JetTables::instance();
    int order = std::min(a.order_, b.order_);
    Jet r(order);
    for (int i = 0; i < t.offsets[order + 1]; ++i) {
        if (a.c_[i] == 0.0) continue;
        int remaining = order - t.degree[i];
        for (int j = 0; j < t.offsets[remaining + 1]; ++j) {
            if (b.c_[j] == 0.0) continue;
            std::array<std::uint8_t, kDim> m;
            for (int v = 0; v < kDim; ++v)
                m[v] = (std::uint8_t)(t.multi[i][v] + t.multi[j][v]);
            r.c_[t.index_of(m)] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

Jet conj(const Jet& a) {
    Jet r = a;
    for (int i = 0; i < r.terms(); ++i) r.c_[i] = std::conj(r.c_[i]);
    return r;
}

Jet real_part(const Jet& a) {
    Jet r = a;
    for (int i = 0; i < r.terms(); ++i) r.c_[i] = r.c_[i].real();
    return r;
}

Jet imag_part(const Jet& a) {
    Jet r = a;
    for (int i = 0; i < r.terms(); ++i) r.c_[i] = r.c_[i].imag();
    return r;
}

Jet Jet::compose(const Jet& a, const std::array<cplx, kMaxOrder + 1>& deriv) {
    // Horner evaluation in the nilpotent part n = a - a.value().
    Jet n = a;
    n.c_[0] = 0.0;
    int order = a.order_;
    static const double inv_fact[kMaxOrder + 1] = {1, 1, 0.5, 1.0 / 6, 1.0 / 24};
    Jet r(order, deriv[order] * inv_fact[order]);
    for (int k = order - 1; k >= 0; --k) {
        r = r * n;
        r.c_[0] += deriv[k] * inv_fact[k];
    }
    return r;
}

Jet inverse(const Jet& a) {
    cplx z = a.value();
    if (z == 0.0) throw std::domain_error("jet inverse at zero value");
    std::array<cplx, kMaxOrder + 1> d;
    cplx p = 1.0 / z;
    double fact = 1;
    for (int k = 0; k <= kMaxOrder; ++k) {
        d[k] = (k % 2 ? -1.0 : 1.0) * fact * p;
        p /= z;
        fact *= k + 1;
    }
    return Jet::compose(a, d);
}

Jet exp(const Jet& a) {
    std::array<cplx, kMaxOrder + 1> d;
    d.fill(std::exp(a.value()));
    return Jet::compose(a, d);
}

Jet log(const Jet& a) {
    cplx z = a.value();
    if (z == 0.0) throw std::domain_error("jet log at zero value");
    std::array<cplx, kMaxOrder + 1> d;
    d[0] = std::log(z);
    cplx p = 1.0 / z;
    double fact = 1;
    for (int k = 1; k <= kMaxOrder; ++k) {
        d[k] = (k % 2 ? 1.0 : -1.0) * fact * p;
        p /= z;
        fact *= k;
    }
    return Jet::compose(a, d);
}

Jet pow(const Jet& a, double p) {
    cplx z = a.value();
    if (z == 0.0) throw std::domain_error("jet pow at zero value");
    std::array<cplx, kMaxOrder + 1> d;
    cplx v = std::pow(z, p);
    double coef = 1;
    for (int k = 0; k <= kMaxOrder; ++k) {
        d[k] = coef * v;
        v /= z;
        coef *= p - k;
    }
    return Jet::compose(a, d);
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }

Jet sin(const Jet& a) {
    cplx s = std::sin(a.value()), c = std::cos(a.value());
    return Jet::compose(a, {s, c, -s, -c, s});
}

Jet cos(const Jet& a) {
    cplx s = std::sin(a.value()), c = std::cos(a.value());
    return Jet::compose(a, {c, -s, -c, s, c});
}

Jet tan(const Jet& a) { return sin(a) / cos(a); }

Jet abs_jet(const Jet& a) { return sqrt(real_part(a * conj(a))); }

}  // namespace spincurv
