// spincurv — exact rational density-weight bookkeeping.
// Spin densities pick up powers of the gauge determinant (weight), its
// conjugate (antiweight) and its modulus (absolute weight) under Weyl gauge
// transformations; world densities pick up powers of the Jacobian. Half-odd
// weights occur (Dirac fields), so weights are exact rationals.

#pragma once

#include <numeric>
#include <stdexcept>

namespace spincurv {

struct Rational {
    long long num = 0;
    long long den = 1;

    constexpr Rational() = default;
    constexpr Rational(long long n) : num(n) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return double(num) / double(den); }
    bool is_zero() const { return num == 0; }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

struct DensityWeight {
    Rational weight;           // power of the gauge determinant
    Rational antiweight;       // power of its conjugate
    Rational absolute_weight;  // power of its modulus
    Rational world_weight;     // world-density (Jacobian) power

    bool is_zero() const {
        return weight.is_zero() && antiweight.is_zero() &&
               absolute_weight.is_zero() && world_weight.is_zero();
    }
    friend bool operator==(const DensityWeight&, const DensityWeight&) = default;
};

// Weights of a product: componentwise sums.
inline DensityWeight compose_weights(const DensityWeight& a,
                                     const DensityWeight& b) {
    return {a.weight + b.weight, a.antiweight + b.antiweight,
            a.absolute_weight + b.absolute_weight,
            a.world_weight + b.world_weight};
}

// Weight of the complex conjugate: weight and antiweight swap.
inline DensityWeight conjugate_weight(const DensityWeight& a) {
    return {a.antiweight, a.weight, a.absolute_weight, a.world_weight};
}

}  // namespace spincurv
