// spincurv — numerical engine for two-component spinor formalisms.
// Truncated multivariate Taylor arithmetic ("jets"): a value together with all
// partial derivatives up to a fixed order, propagated exactly through analytic
// expressions. Four chart variables, complex coefficients, order <= 4.

#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace spincurv {

using cplx = std::complex<double>;

inline constexpr int kDim = 4;       // chart dimension
inline constexpr int kMaxOrder = 4;  // highest derivative order carried

// Number of monomials x^alpha with |alpha| <= 4 in 4 variables:
// 1 + 4 + 10 + 20 + 35.
inline constexpr int kJetTerms = 70;

// Static enumeration of multi-indices alpha (|alpha| <= kMaxOrder), ordered by
// total degree then lexicographically, plus lookup tables used by arithmetic.
struct JetTables {
    // term -> multi-index
    std::array<std::array<std::uint8_t, kDim>, kJetTerms> multi{};
    // term -> total degree
    std::array<std::uint8_t, kJetTerms> degree{};
    // term -> alpha! (factorial product), used when reading derivatives off
    // Taylor coefficients
    std::array<double, kJetTerms> factorial{};
    // first term index of each degree block; offsets[d]..offsets[d+1)
    std::array<int, kMaxOrder + 2> offsets{};
    // base-(kMaxOrder+1) encoding of a multi-index -> term index (or -1)
    std::array<int, 625> lookup{};

    static const JetTables& instance();
    int index_of(const std::array<std::uint8_t, kDim>& m) const;

  private:
    JetTables();
};

// A jet: the Taylor coefficients c_alpha of an analytic function about the
// evaluation point, f(x + h) = sum c_alpha h^alpha, truncated at `order`.
// Coefficients store c_alpha = (d^alpha f) / alpha!.
class Jet {
  public:
    Jet() = default;
    explicit Jet(int order) : order_(order) {}
    Jet(int order, cplx constant) : order_(order) { c_[0] = constant; }

    static Jet constant(cplx v, int order) { return Jet(order, v); }
    // Seed jet of the coordinate x^axis at value v: c_0 = v, c_{e_axis} = 1.
    static Jet coordinate(double v, int axis, int order);

    int order() const { return order_; }
    // Truncated (or zero-padded view of the same) jet at a different order.
    Jet truncated(int order) const;

    cplx value() const { return c_[0]; }
    cplx d1(int i) const;
    cplx d2(int i, int j) const;
    cplx d3(int i, int j, int k) const;

    // The jet of the partial derivative d_axis f, one order lower.
    Jet derivative(int axis) const;

    cplx coeff(int term) const { return c_[term]; }
    cplx& coeff(int term) { return c_[term]; }
    int terms() const;  // active term count for this order

    bool finite() const;

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }
    Jet& operator*=(cplx s);

    friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
    friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b) { return a * inverse(b); }
    friend Jet operator*(Jet a, cplx s) { a *= s; return a; }
    friend Jet operator*(cplx s, Jet a) { a *= s; return a; }
    friend Jet operator/(Jet a, cplx s) { a *= 1.0 / s; return a; }
    friend Jet operator+(Jet a, cplx s) { a.c_[0] += s; return a; }
    friend Jet operator+(cplx s, Jet a) { a.c_[0] += s; return a; }
    friend Jet operator-(Jet a, cplx s) { a.c_[0] -= s; return a; }
    friend Jet operator-(cplx s, const Jet& a) { Jet r = -a; r.c_[0] += s; return r; }

    // Componentwise conjugate/real/imag are valid jets of conj(f), Re f, Im f
    // because the chart variables are real.
    friend Jet conj(const Jet& a);
    friend Jet real_part(const Jet& a);
    friend Jet imag_part(const Jet& a);

    // Analytic function composition (value must be in the domain of the
    // principal branch where relevant).
    friend Jet inverse(const Jet& a);
    friend Jet exp(const Jet& a);
    friend Jet log(const Jet& a);
    friend Jet sqrt(const Jet& a);
    friend Jet pow(const Jet& a, double p);
    friend Jet sin(const Jet& a);
    friend Jet cos(const Jet& a);
    friend Jet tan(const Jet& a);

    // |f| = sqrt(f conj f); valid for nowhere-vanishing f.
    friend Jet abs_jet(const Jet& a);

  private:
    // f(c0 + n) = sum_k deriv[k]/k! n^k for nilpotent n; deriv[k] = f^(k)(c0).
    static Jet compose(const Jet& a, const std::array<cplx, kMaxOrder + 1>& deriv);

    int order_ = 0;
    std::array<cplx, kJetTerms> c_{};  // inactive tail kept at zero
};

}  // namespace spincurv
