// spincurv — metric spinors, connecting objects, and the world<->spin
// dictionary for both formalisms, per probe point.

#pragma once

#include "spincurv/jet_linalg.hpp"
#include "spincurv/spinor_field.hpp"

namespace spincurv {

// The metric spinor and its inverse/conjugates at one point. In the
// epsilon-formalism the blocks are the constant alternating arrays carrying
// density weights (-1 covariant, +1 contravariant; antiweights for the primed
// conjugates); in the gamma-formalism they are the weightless spin tensors
// gamma_AB = gamma eps_AB, gamma^AB = gamma^{-1} eps^AB.
struct SpinMetric {
    Formalism formalism = Formalism::Epsilon;
    Jet gamma;          // |gamma| e^{i Phi}; identically 1 for epsilon
    SpinorField lo;     // M_AB      slots (unprimed dn, unprimed dn)
    SpinorField up;     // M^AB
    SpinorField lo_bar; // conj(M)_{A'B'}
    SpinorField up_bar; // conj(M)^{A'B'}
};

// gamma_value is ignored for the epsilon-formalism. Throws EvaluationError if
// gamma vanishes.
SpinMetric make_spin_metric(Formalism formalism, const Jet& gamma_value);

enum class IndexDirection { Raise, Lower };

// Raise/lower one spinor slot following the staggered convention
//   up^A = M^{AB} low_B,   low_A = up^B M_{BA}.
// In the epsilon-formalism the result's weight (unprimed slot) or antiweight
// (primed slot) shifts by +1 on raising / -1 on lowering; the gamma-formalism
// preserves weights.
SpinorField adjust_index(const SpinorField& field, int slot,
                         IndexDirection direction, const SpinMetric& metric);

// The four index arrangements of the connecting objects at one point.
// Slot layout of each block: (world, unprimed, primed).
struct ConnectingObjects {
    Formalism formalism = Formalism::Epsilon;
    SpinorField lo_up;  // S_a^{AA'}
    SpinorField up_up;  // S^{aAA'}
    SpinorField lo_lo;  // S_{aAA'}
    SpinorField up_lo;  // S^a_{AA'}
};

// Build the connecting objects from an orthonormal tetrad e_mu^a (frame index
// mu rows, world index a columns; signature (+---)) and the metric/inverse
// metric at the point. The flat kernel is the Hermitian basis
// (I, sx, sy, sz)/sqrt2 contracted with the co-tetrad; the gamma-formalism
// blocks are the |gamma|-scaled associations (lower spinor stairs scale by
// |gamma|, upper by |gamma|^{-1}). Throws ConfigError if the tetrad fails to
// reproduce the metric to 1e-8.
ConnectingObjects connecting_from_tetrad(const JetMat<4>& tetrad,
                                         const JetMat<4>& g,
                                         const JetMat<4>& ginv,
                                         Formalism formalism, const Jet& gamma);

enum class TranslateDirection { WorldToSpin, SpinToWorld };

// Translate one slot between world and spinor form. For WorldToSpin, `slot`
// is a world slot, replaced in place by an (unprimed, primed) pair of the
// same stair. For SpinToWorld, `slot` is the unprimed half of an adjacent
// (unprimed, primed) like-stair pair, replaced by one world slot. Density
// weights follow from the blocks (absolute weight +-1 per translated slot in
// the epsilon-formalism).
SpinorField world_spin_translate(const SpinorField& field, int slot,
                                 TranslateDirection direction,
                                 const ConnectingObjects& conn);

// Translate every world slot to spinor form (used by the commutator engine).
SpinorField all_world_to_spin(const SpinorField& field,
                              const ConnectingObjects& conn);

// The alternating spinor e_{AA'BB'CC'DD'} =
// i (M_AC M_BD conj(M)_{A'D'} conj(M)_{B'C'} - c.c.), slot order
// (A, A', B, B', C, C', D, D').
SpinorField alternating_spinor(const SpinMetric& metric);

}  // namespace spincurv
