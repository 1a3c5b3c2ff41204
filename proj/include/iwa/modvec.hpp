// modvec.hpp — elements of free modules A^k over the graded ring, with the
// module orders used by the Groebner engine (term-over-position, elimination
// blocks, Schreyer orders induced by a previous level's leading terms).
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "iwa/poly.hpp"

namespace iwa {

struct MTerm {
    std::uint32_t pos;
    Expo e;
    std::uint32_t c;
};

struct ModOrder {
    enum class Kind { TOP, POT_HEAD, SCHREYER };
    Kind kind = Kind::TOP;
    const RingSpec* R = nullptr;
    std::uint32_t head = 0;               // POT_HEAD: positions < head dominate everything else
    std::vector<MTerm> lead;              // SCHREYER: leading term of previous-level element i
    std::shared_ptr<const ModOrder> parent; // SCHREYER: order the lead terms live in

    static ModOrder top(const RingSpec& R) {
        ModOrder o; o.kind = Kind::TOP; o.R = &R; return o;
    }
    static ModOrder pot_head(const RingSpec& R, std::uint32_t head) {
        ModOrder o; o.kind = Kind::POT_HEAD; o.R = &R; o.head = head; return o;
    }
    static ModOrder schreyer(std::shared_ptr<const ModOrder> parent, std::vector<MTerm> lead) {
        ModOrder o; o.kind = Kind::SCHREYER; o.R = parent->R;
        o.parent = std::move(parent); o.lead = std::move(lead); return o;
    }

    // strcmp-style; positive means a > b
    int cmp(const MTerm& a, const MTerm& b) const {
        switch (kind) {
        case Kind::TOP: {
            int c = mono_cmp(a.e, b.e, *R);
            if (c) return c;
            if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
            return 0;
        }
        case Kind::POT_HEAD: {
            bool ha = a.pos < head, hb = b.pos < head;
            if (ha != hb) return ha ? 1 : -1;
            if (ha) {
                if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
                return mono_cmp(a.e, b.e, *R);
            }
            int c = mono_cmp(a.e, b.e, *R);
            if (c) return c;
            if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
            return 0;
        }
        case Kind::SCHREYER: {
            MTerm ia{lead[a.pos].pos, mono_mul(a.e, lead[a.pos].e), 1};
            MTerm ib{lead[b.pos].pos, mono_mul(b.e, lead[b.pos].e), 1};
            int c = parent->cmp(ia, ib);
            if (c) return c;
            if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
            return 0;
        }
        }
        return 0;
    }
};

// Sparse vector in A^rank; terms kept sorted strictly decreasing under a
// ModOrder that every mutating operation receives explicitly.
class ModVec {
public:
    ModVec() = default;
    ModVec(RingPtr R, std::uint32_t rank) : ring_(std::move(R)), rank_(rank) {}
    ModVec(RingPtr R, std::uint32_t rank, std::vector<MTerm> terms, const ModOrder& O)
        : ring_(std::move(R)), rank_(rank), terms_(std::move(terms)) {
        normalize(O);
    }

    const RingPtr& ring() const { return ring_; }
    std::uint32_t rank() const { return rank_; }
    const std::vector<MTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const MTerm& lt() const {
        if (terms_.empty()) throw std::domain_error("ModVec::lt on zero vector");
        return terms_.front();
    }

    ModVec add(const ModVec& o, const ModOrder& O) const;
    ModVec sub(const ModVec& o, const ModOrder& O) const;
    ModVec term_mul(const Expo& m, std::uint32_t c) const; // order-preserving
    ModVec scaled(std::uint32_t c) const;
    ModVec monic() const;
    ModVec resorted(const ModOrder& O) const { return ModVec(ring_, rank_, terms_, O); }

    bool equal_terms(const ModVec& o) const;

    // component extraction / assembly (order supplied for re-normalization)
    GradedPoly component(std::uint32_t pos) const;
    static ModVec from_row(const RingPtr& R, const std::vector<GradedPoly>& row, const ModOrder& O);
    std::vector<GradedPoly> to_row() const;

    // embed into a larger free module, shifting positions by `offset`
    ModVec embedded(std::uint32_t new_rank, std::uint32_t offset, const ModOrder& O) const;
    // restrict to positions [lo, hi), re-based at 0
    ModVec block(std::uint32_t lo, std::uint32_t hi, const ModOrder& O) const;

private:
    RingPtr ring_;
    std::uint32_t rank_ = 0;
    std::vector<MTerm> terms_;
    void normalize(const ModOrder& O);
};

} // namespace iwa
