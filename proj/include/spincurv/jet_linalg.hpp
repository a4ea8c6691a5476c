// spincurv — dense linear algebra over jet scalars (4x4 and 2x2 workloads).

#pragma once

#include <array>

#include "spincurv/jet.hpp"

namespace spincurv {

template <int N>
using JetMat = std::array<std::array<Jet, N>, N>;

// Gaussian elimination with partial pivoting on coefficient values.
// Throws EvaluationError on a (numerically) singular matrix.
template <int N>
JetMat<N> jet_inverse(const JetMat<N>& m);

template <int N>
Jet jet_determinant(const JetMat<N>& m);

extern template JetMat<2> jet_inverse<2>(const JetMat<2>&);
extern template JetMat<4> jet_inverse<4>(const JetMat<4>&);
extern template Jet jet_determinant<2>(const JetMat<2>&);
extern template Jet jet_determinant<4>(const JetMat<4>&);

}  // namespace spincurv
