#include "iwa/modvec.hpp"

#include <algorithm>

namespace iwa {

void ModVec::normalize(const ModOrder& O) {
    for (auto& t : terms_) {
        if (t.pos >= rank_) throw std::invalid_argument("ModVec: position out of range");
        if (t.e.size() != ring_->nvars()) throw std::invalid_argument("ModVec: exponent arity");
        t.c %= ring_->p;
    }
    std::sort(terms_.begin(), terms_.end(),
              [&](const MTerm& a, const MTerm& b) { return O.cmp(a, b) > 0; });
    std::vector<MTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().pos == t.pos && out.back().e == t.e) {
            out.back().c = fp::add(out.back().c, t.c, ring_->p);
            if (out.back().c == 0) out.pop_back();
        } else if (t.c) {
            out.push_back(t);
        }
    }
    terms_ = std::move(out);
}

ModVec ModVec::add(const ModVec& o, const ModOrder& O) const {
    const std::uint32_t p = ring_->p;
    ModVec r(ring_, rank_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = O.cmp(terms_[i], o.terms_[j]);
        if (c > 0) r.terms_.push_back(terms_[i++]);
        else if (c < 0) r.terms_.push_back(o.terms_[j++]);
        else {
            std::uint32_t s = fp::add(terms_[i].c, o.terms_[j].c, p);
            if (s) r.terms_.push_back({terms_[i].pos, terms_[i].e, s});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

ModVec ModVec::sub(const ModVec& o, const ModOrder& O) const {
    return add(o.scaled(ring_->p - 1), O);
}

ModVec ModVec::term_mul(const Expo& m, std::uint32_t c) const {
    c %= ring_->p;
    ModVec r(ring_, rank_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_)
        r.terms_.push_back({t.pos, mono_mul(t.e, m), fp::mul(t.c, c, ring_->p)});
    // multiplying by a monomial preserves relative order for all orders we use
    return r;
}

ModVec ModVec::scaled(std::uint32_t c) const {
    c %= ring_->p;
    ModVec r(ring_, rank_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = fp::mul(t.c, c, ring_->p);
    return r;
}

ModVec ModVec::monic() const {
    if (is_zero()) return *this;
    return scaled(fp::inv(terms_.front().c, ring_->p));
}

bool ModVec::equal_terms(const ModVec& o) const {
    if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].pos != o.terms_[i].pos || terms_[i].c != o.terms_[i].c ||
            terms_[i].e != o.terms_[i].e)
            return false;
    return true;
}

GradedPoly ModVec::component(std::uint32_t pos) const {
    std::vector<Term> ts;
    for (auto& t : terms_)
        if (t.pos == pos) ts.push_back({t.e, t.c});
    return GradedPoly(ring_, std::move(ts));
}

ModVec ModVec::from_row(const RingPtr& R, const std::vector<GradedPoly>& row, const ModOrder& O) {
    ModVec v(R, static_cast<std::uint32_t>(row.size()));
    std::vector<MTerm> ts;
    for (std::uint32_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero()) continue;
        if (*row[j].ring() != *R) throw std::invalid_argument("ModVec::from_row: ring mismatch");
        for (auto& t : row[j].terms()) ts.push_back({j, t.e, t.c});
    }
    return ModVec(R, static_cast<std::uint32_t>(row.size()), std::move(ts), O);
}

std::vector<GradedPoly> ModVec::to_row() const {
    std::vector<GradedPoly> row;
    row.reserve(rank_);
    for (std::uint32_t j = 0; j < rank_; ++j) row.push_back(component(j));
    return row;
}

ModVec ModVec::embedded(std::uint32_t new_rank, std::uint32_t offset, const ModOrder& O) const {
    ModVec r(ring_, new_rank);
    std::vector<MTerm> ts = terms_;
    for (auto& t : ts) t.pos += offset;
    return ModVec(ring_, new_rank, std::move(ts), O);
}

ModVec ModVec::block(std::uint32_t lo, std::uint32_t hi, const ModOrder& O) const {
    std::vector<MTerm> ts;
    for (auto& t : terms_)
        if (t.pos >= lo && t.pos < hi) ts.push_back({t.pos - lo, t.e, t.c});
    return ModVec(ring_, hi - lo, std::move(ts), O);
}

} // namespace iwa
