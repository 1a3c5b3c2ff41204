// poly.hpp — sparse multivariate polynomials over F_p with the fixed weighted order.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwa/ring.hpp"

namespace iwa {

struct Term {
    Expo e;
    std::uint32_t c; // in [1, p); zero terms are never stored
};

// Terms are kept sorted in strictly decreasing monomial order; terms.front()
// is the leading term.
class GradedPoly {
public:
    GradedPoly() = default;
    explicit GradedPoly(RingPtr R) : ring_(std::move(R)) {}
    GradedPoly(RingPtr R, std::vector<Term> terms) : ring_(std::move(R)), terms_(std::move(terms)) {
        normalize();
    }

    static GradedPoly zero(RingPtr R) { return GradedPoly(std::move(R)); }
    static GradedPoly constant(RingPtr R, std::int64_t v) {
        GradedPoly f(R);
        std::uint32_t c = fp::reduce(v, R->p);
        if (c) f.terms_.push_back({Expo(R->nvars(), 0), c});
        return f;
    }
    static GradedPoly variable(RingPtr R, std::size_t i, std::uint32_t exp = 1) {
        GradedPoly f(R);
        Expo e(R->nvars(), 0);
        e[i] = exp;
        f.terms_.push_back({std::move(e), 1});
        return f;
    }
    static GradedPoly monomial(RingPtr R, Expo e, std::int64_t v) {
        GradedPoly f(R);
        std::uint32_t c = fp::reduce(v, R->p);
        if (c) f.terms_.push_back({std::move(e), c});
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || mono_is_one(terms_.front().e); }
    bool is_unit() const { return terms_.size() == 1 && mono_is_one(terms_.front().e); }
    std::size_t size() const { return terms_.size(); }

    const Term& lt() const {
        if (terms_.empty()) throw std::domain_error("GradedPoly::lt on zero polynomial");
        return terms_.front();
    }
    const Expo& lm() const { return lt().e; }
    std::uint32_t lc() const { return lt().c; }
    std::uint64_t degree() const { return wdeg(lt().e, *ring_); } // weighted
    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (auto& t : terms_) d = std::max(d, t.e[var]);
        return d;
    }

    // True iff all terms have the same shifted weighted degree.
    bool is_homogeneous() const {
        if (terms_.size() <= 1) return true;
        std::uint64_t d = wdeg(terms_.front().e, *ring_);
        for (auto& t : terms_)
            if (wdeg(t.e, *ring_) != d) return false;
        return true;
    }

    GradedPoly operator-() const;
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly& operator+=(const GradedPoly& o) { return *this = *this + o; }
    GradedPoly& operator-=(const GradedPoly& o) { return *this = *this - o; }
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

    GradedPoly scaled(std::uint32_t c) const;            // c * f
    GradedPoly term_mul(const Expo& m, std::uint32_t c) const; // c * x^m * f
    GradedPoly monic() const;                            // divide by leading coefficient

    bool operator==(const GradedPoly& o) const;
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }
    bool operator<(const GradedPoly& o) const; // deterministic total order for containers

    std::uint32_t coeff(const Expo& e) const;
    std::string str() const;

    // Exact division: returns f/g if g | f, otherwise nullopt.
    static std::optional<GradedPoly> divide_exact(const GradedPoly& f, const GradedPoly& g);

    void check_ring(const GradedPoly& o) const {
        if (!ring_ || !o.ring_ || *ring_ != *o.ring_)
            throw std::invalid_argument("GradedPoly: ring mismatch");
    }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void normalize(); // sort desc, merge equal monomials, drop zeros
};

GradedPoly parse_poly(const RingPtr& R, const std::string& text);

} // namespace iwa
