#include "spincurv/jet_linalg.hpp"

#include <cmath>
#include <utility>

#include "spincurv/errors.hpp"

namespace spincurv {

template <int N>
JetMat<N> jet_inverse(const JetMat<N>& m) {
    int order = m[0][0].order();
    JetMat<N> a = m;
    JetMat<N> inv;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            inv[i][j] = Jet(order, i == j ? 1.0 : 0.0);
    for (int col = 0; col < N; ++col) {
        int piv = col;
        for (int r = col + 1; r < N; ++r)
            if (std::abs(a[r][col].value()) > std::abs(a[piv][col].value()))
                piv = r;
        if (std::abs(a[piv][col].value()) < 1e-14)
            throw EvaluationError("singular matrix in jet inversion");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Jet d = inverse(a[col][col]);
        for (int j = 0; j < N; ++j) {
            a[col][j] = a[col][j] * d;
            inv[col][j] = inv[col][j] * d;
        }
        for (int r = 0; r < N; ++r) {
            if (r == col) continue;
            Jet f = a[r][col];
            if (f.value() == 0.0 && f.order() == order) {
                bool zero = true;
                for (int t = 0; t < f.terms(); ++t)
                    if (f.coeff(t) != 0.0) { zero = false; break; }
                if (zero) continue;
            }
            for (int j = 0; j < N; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

template <int N>
Jet jet_determinant(const JetMat<N>& m) {
    int order = m[0][0].order();
    JetMat<N> a = m;
    Jet det(order, 1.0);
    for (int col = 0; col < N; ++col) {
        int piv = col;
        for (int r = col + 1; r < N; ++r)
            if (std::abs(a[r][col].value()) > std::abs(a[piv][col].value()))
                piv = r;
        if (std::abs(a[piv][col].value()) < 1e-14)
            return Jet(order, 0.0);
        if (piv != col) {
            std::swap(a[col], a[piv]);
            det = det * (-1.0);
        }
        det = det * a[col][col];
        Jet d = inverse(a[col][col]);
        for (int r = col + 1; r < N; ++r) {
            Jet f = a[r][col] * d;
            for (int j = col; j < N; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

template JetMat<2> jet_inverse<2>(const JetMat<2>&);
template JetMat<4> jet_inverse<4>(const JetMat<4>&);
template Jet jet_determinant<2>(const JetMat<2>&);
template Jet jet_determinant<4>(const JetMat<4>&);

}  // namespace spincurv
