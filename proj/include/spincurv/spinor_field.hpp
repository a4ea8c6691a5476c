// spincurv — component container for world-spin quantities of arbitrary
// valence and density weight, with the generic slot algebra (outer products,
// contractions, symmetrizers, conjugation) used by every identity check.
//
// Components are jets evaluated at a single probe point; a field over a probe
// set is simply a vector of these per-point values. Index layout is row-major
// over the slot list; world slots have dimension 4, spinor slots dimension 2.
// The conventional ordering (world, unprimed, primed) is followed by the
// pipeline's constructors; the algebra itself works on any slot arrangement
// (the covariant derivative, for instance, prepends a lower world slot).

#pragma once

#include <vector>

#include "spincurv/errors.hpp"
#include "spincurv/jet.hpp"
#include "spincurv/weights.hpp"

namespace spincurv {

enum class Formalism { Gamma, Epsilon };

enum class SlotKind { World, Unprimed, Primed };

struct Slot {
    SlotKind kind;
    bool up;
    friend bool operator==(const Slot&, const Slot&) = default;
};

inline int slot_dim(SlotKind k) { return k == SlotKind::World ? 4 : 2; }

// Slot-count summary {p,q; a,b; c,d}.
struct Valence {
    int world_up = 0, world_down = 0;
    int unprimed_up = 0, unprimed_down = 0;
    int primed_up = 0, primed_down = 0;
    friend bool operator==(const Valence&, const Valence&) = default;
};

class SpinorField {
  public:
    SpinorField() = default;
    SpinorField(Formalism form, std::vector<Slot> slots, DensityWeight dw,
                int jet_order);

    Formalism formalism() const { return form_; }
    const std::vector<Slot>& slots() const { return slots_; }
    const DensityWeight& dweight() const { return dw_; }
    DensityWeight& dweight() { return dw_; }
    int jet_order() const { return order_; }
    Valence valence() const;

    int rank() const { return (int)slots_.size(); }
    int size() const { return (int)c_.size(); }
    Jet& flat(int i) { return c_[i]; }
    const Jet& flat(int i) const { return c_[i]; }

    // Multi-index addressing (idx.size() == rank()).
    int offset(const std::vector<int>& idx) const;
    Jet& at(const std::vector<int>& idx) { return c_[offset(idx)]; }
    const Jet& at(const std::vector<int>& idx) const { return c_[offset(idx)]; }
    std::vector<int> unflatten(int flat) const;

    SpinorField& operator+=(const SpinorField& o);
    SpinorField& operator-=(const SpinorField& o);
    friend SpinorField operator+(SpinorField a, const SpinorField& b) {
        a += b;
        return a;
    }
    friend SpinorField operator-(SpinorField a, const SpinorField& b) {
        a -= b;
        return a;
    }
    SpinorField operator-() const;

  private:
    Formalism form_ = Formalism::Epsilon;
    std::vector<Slot> slots_;
    DensityWeight dw_;
    int order_ = 0;
    std::vector<Jet> c_;
};

// Scalar (rank-0) field wrapping a jet.
SpinorField scalar_field(Formalism form, const Jet& value,
                         DensityWeight dw = {});

// Componentwise scaling by a jet (weights unchanged).
SpinorField scale(const SpinorField& f, const Jet& s);
SpinorField scale(const SpinorField& f, cplx s);

// Tensor (outer) product; weights compose.
SpinorField outer(const SpinorField& a, const SpinorField& b);

// Contract an up slot with a down slot of the same kind (plain summation;
// raising/lowering conventions live in the metric-spinor module).
SpinorField contract(const SpinorField& f, int slot_up, int slot_down);

// Slot rearrangement. For permuted, perm[k] names the source slot feeding
// destination slot k.
SpinorField permuted(const SpinorField& f, const std::vector<int>& perm);
SpinorField swap_slots(const SpinorField& f, int i, int j);
SpinorField move_slot(const SpinorField& f, int from, int to);

// (Anti)symmetrize over a list of like slots, averaging over permutations
// with 1/n! normalization.
SpinorField symmetrize(const SpinorField& f, const std::vector<int>& pos,
                       bool antisym = false);

// Complex conjugate: primedness of every spinor slot flips, components
// conjugate, weight and antiweight swap.
SpinorField conjugate_field(const SpinorField& f);

// Largest component magnitude (values only, not derivative coefficients).
double max_abs(const SpinorField& f);
// Largest componentwise difference of values.
double max_abs_diff(const SpinorField& a, const SpinorField& b);
// Relative residual: |a-b| against max(|a|,|b|) with an absolute floor.
double rel_diff(const SpinorField& a, const SpinorField& b,
                double floor = 1e-13);

}  // namespace spincurv
