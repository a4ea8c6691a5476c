#include "spincurv/spinor_field.hpp"

#include <algorithm>
#include <cmath>

namespace spincurv {

SpinorField::SpinorField(Formalism form, std::vector<Slot> slots,
                         DensityWeight dw, int jet_order)
    : form_(form), slots_(std::move(slots)), dw_(dw), order_(jet_order) {
    int n = 1;
    for (const Slot& s : slots_) n *= slot_dim(s.kind);
    c_.assign(n, Jet(order_));
}

Valence SpinorField::valence() const {
    Valence v;
    for (const Slot& s : slots_) {
        switch (s.kind) {
            case SlotKind::World: (s.up ? v.world_up : v.world_down)++; break;
            case SlotKind::Unprimed:
                (s.up ? v.unprimed_up : v.unprimed_down)++;
                break;
            case SlotKind::Primed: (s.up ? v.primed_up : v.primed_down)++; break;
        }
    }
    return v;
}

int SpinorField::offset(const std::vector<int>& idx) const {
    int o = 0;
    for (int k = 0; k < rank(); ++k) o = o * slot_dim(slots_[k].kind) + idx[k];
    return o;
}

std::vector<int> SpinorField::unflatten(int flat) const {
    std::vector<int> idx(rank());
    for (int k = rank() - 1; k >= 0; --k) {
        int d = slot_dim(slots_[k].kind);
        idx[k] = flat % d;
        flat /= d;
    }
    return idx;
}

SpinorField& SpinorField::operator+=(const SpinorField& o) {
    if (slots_ != o.slots_) throw UsageError("slot mismatch in field addition");
    for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
    order_ = std::min(order_, o.order_);
    return *this;
}

SpinorField& SpinorField::operator-=(const SpinorField& o) {
    if (slots_ != o.slots_) throw UsageError("slot mismatch in field subtraction");
    for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
    order_ = std::min(order_, o.order_);
    return *this;
}

SpinorField SpinorField::operator-() const {
    SpinorField r = *this;
    for (int i = 0; i < r.size(); ++i) r.c_[i] = -r.c_[i];
    return r;
}

SpinorField scalar_field(Formalism form, const Jet& value, DensityWeight dw) {
    SpinorField r(form, {}, dw, value.order());
    r.flat(0) = value;
    return r;
}

SpinorField scale(const SpinorField& f, const Jet& s) {
    SpinorField r = f;
    for (int i = 0; i < r.size(); ++i) r.flat(i) = r.flat(i) * s;
    return r;
}

SpinorField scale(const SpinorField& f, cplx s) {
    SpinorField r = f;
    for (int i = 0; i < r.size(); ++i) r.flat(i) = r.flat(i) * s;
    return r;
}

SpinorField outer(const SpinorField& a, const SpinorField& b) {
    std::vector<Slot> slots = a.slots();
    slots.insert(slots.end(), b.slots().begin(), b.slots().end());
    SpinorField r(a.formalism(), std::move(slots),
                  compose_weights(a.dweight(), b.dweight()),
                  std::min(a.jet_order(), b.jet_order()));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            r.flat(i * b.size() + j) = a.flat(i) * b.flat(j);
    return r;
}

SpinorField contract(const SpinorField& f, int slot_up, int slot_down) {
    const auto& sl = f.slots();
    if (slot_up == slot_down || sl[slot_up].kind != sl[slot_down].kind ||
        !sl[slot_up].up || sl[slot_down].up)
        throw UsageError("contract needs a matching up/down slot pair");
    int dim = slot_dim(sl[slot_up].kind);
    std::vector<Slot> slots;
    for (int k = 0; k < f.rank(); ++k)
        if (k != slot_up && k != slot_down) slots.push_back(sl[k]);
    SpinorField r(f.formalism(), std::move(slots), f.dweight(), f.jet_order());
    for (int o = 0; o < r.size(); ++o) {
        std::vector<int> ridx = r.unflatten(o);
        std::vector<int> idx(f.rank());
        int k2 = 0;
        for (int k = 0; k < f.rank(); ++k)
            if (k != slot_up && k != slot_down) idx[k] = ridx[k2++];
        Jet sum(f.jet_order());
        for (int m = 0; m < dim; ++m) {
            idx[slot_up] = m;
            idx[slot_down] = m;
            sum += f.at(idx);
        }
        r.flat(o) = sum;
    }
    return r;
}

SpinorField permuted(const SpinorField& f, const std::vector<int>& perm) {
    // perm[k] = source slot feeding destination slot k
    std::vector<Slot> slots(f.rank());
    for (int k = 0; k < f.rank(); ++k) slots[k] = f.slots()[perm[k]];
    SpinorField r(f.formalism(), std::move(slots), f.dweight(), f.jet_order());
    for (int o = 0; o < r.size(); ++o) {
        std::vector<int> ridx = r.unflatten(o);
        std::vector<int> idx(f.rank());
        for (int k = 0; k < f.rank(); ++k) idx[perm[k]] = ridx[k];
        r.flat(o) = f.at(idx);
    }
    return r;
}

SpinorField swap_slots(const SpinorField& f, int i, int j) {
    std::vector<int> perm(f.rank());
    for (int k = 0; k < f.rank(); ++k) perm[k] = k;
    std::swap(perm[i], perm[j]);
    return permuted(f, perm);
}

SpinorField move_slot(const SpinorField& f, int from, int to) {
    std::vector<int> perm;
    for (int k = 0; k < f.rank(); ++k)
        if (k != from) perm.push_back(k);
    perm.insert(perm.begin() + to, from);
    return permuted(f, perm);
}

SpinorField symmetrize(const SpinorField& f, const std::vector<int>& pos,
                       bool antisym) {
    for (int p : pos)
        if (f.slots()[p] != f.slots()[pos[0]])
            throw UsageError("symmetrizer slots must agree in kind and stair");
    std::vector<int> sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    SpinorField acc(f.formalism(), f.slots(), f.dweight(), f.jet_order());
    std::vector<int> arrangement = sorted;
    double n = 0;
    do {
        // destination slot sorted[k] draws from source slot arrangement[k]
        std::vector<int> perm(f.rank());
        for (int k = 0; k < f.rank(); ++k) perm[k] = k;
        for (size_t k = 0; k < sorted.size(); ++k) perm[sorted[k]] = arrangement[k];
        SpinorField term = permuted(f, perm);
        if (antisym) {
            // parity of the arrangement relative to sorted order
            std::vector<int> p = arrangement;
            int swaps = 0;
            for (size_t k = 0; k < p.size(); ++k)
                while (p[k] != sorted[k])
                    for (size_t l = k + 1; l < p.size(); ++l)
                        if (p[l] == sorted[k]) {
                            std::swap(p[k], p[l]);
                            ++swaps;
                            break;
                        }
            if (swaps % 2) term = -term;
        }
        acc += term;
        n += 1;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    for (int i = 0; i < acc.size(); ++i) acc.flat(i) = acc.flat(i) * (1.0 / n);
    return acc;
}

SpinorField conjugate_field(const SpinorField& f) {
    std::vector<Slot> slots = f.slots();
    for (Slot& s : slots) {
        if (s.kind == SlotKind::Unprimed)
            s.kind = SlotKind::Primed;
        else if (s.kind == SlotKind::Primed)
            s.kind = SlotKind::Unprimed;
    }
    SpinorField r(f.formalism(), std::move(slots), conjugate_weight(f.dweight()),
                  f.jet_order());
    for (int i = 0; i < f.size(); ++i) r.flat(i) = conj(f.flat(i));
    return r;
}

double max_abs(const SpinorField& f) {
    double m = 0;
    for (int i = 0; i < f.size(); ++i)
        m = std::max(m, std::abs(f.flat(i).value()));
    return m;
}

double max_abs_diff(const SpinorField& a, const SpinorField& b) {
    double m = 0;
    for (int i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.flat(i).value() - b.flat(i).value()));
    return m;
}

double rel_diff(const SpinorField& a, const SpinorField& b, double floor) {
    double scale = std::max({max_abs(a), max_abs(b), floor});
    return max_abs_diff(a, b) / scale;
}

}  // namespace spincurv
