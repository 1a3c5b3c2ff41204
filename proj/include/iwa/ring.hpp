// ring.hpp — graded coefficient ring description and weighted monomials.
#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "iwa/fp.hpp"

namespace iwa {

// A weighted polynomial ring F_p[x_0, ..., x_d] with positive integer weights.
// The monomial order is fixed for the whole library: weighted degree first,
// ties broken by reverse lexicographic with x_0 > x_1 > ... > x_d.
struct RingSpec {
    std::uint32_t p = 0;
    std::vector<std::string> vars;
    std::vector<std::uint32_t> weights;

    RingSpec() = default;
    RingSpec(std::uint32_t p_, std::vector<std::string> vars_, std::vector<std::uint32_t> weights_)
        : p(p_), vars(std::move(vars_)), weights(std::move(weights_)) {
        validate();
    }

    std::size_t nvars() const { return vars.size(); }

    void validate() const {
        if (!fp::is_prime(p)) throw std::invalid_argument("RingSpec: p must be prime");
        if (p >= (1u << 31)) throw std::invalid_argument("RingSpec: p too large");
        if (vars.empty()) throw std::invalid_argument("RingSpec: need at least one variable");
        if (vars.size() != weights.size())
            throw std::invalid_argument("RingSpec: weights/vars size mismatch");
        for (auto w : weights)
            if (w == 0) throw std::invalid_argument("RingSpec: weights must be positive");
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw std::invalid_argument("RingSpec: duplicate variable name");
    }

    bool operator==(const RingSpec& o) const {
        return p == o.p && vars == o.vars && weights == o.weights;
    }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                         std::vector<std::uint32_t> weights) {
    return std::make_shared<const RingSpec>(p, std::move(vars), std::move(weights));
}

// Convenience: all weights 1.
inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars) {
    std::vector<std::uint32_t> w(vars.size(), 1);
    return make_ring(p, std::move(vars), std::move(w));
}

// Exponent vector; length always equals the ring's variable count.
using Expo = std::vector<std::uint32_t>;

inline std::uint64_t wdeg(const Expo& e, const RingSpec& R) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += static_cast<std::uint64_t>(e[i]) * R.weights[i];
    return d;
}

// Weighted degrevlex.  Returns <0, 0, >0 like strcmp; positive means a > b.
inline int mono_cmp(const Expo& a, const Expo& b, const RingSpec& R) {
    std::uint64_t da = wdeg(a, R), db = wdeg(b, R);
    if (da != db) return da > db ? 1 : -1;
    // revlex tiebreak: a > b iff the last nonzero entry of a-b is negative
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

inline bool mono_divides(const Expo& a, const Expo& b) { // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expo mono_mul(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Expo mono_div(const Expo& a, const Expo& b) { // a / b, caller checks divisibility
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Expo mono_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool mono_coprime(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

inline bool mono_is_one(const Expo& a) {
    for (auto v : a) if (v) return false;
    return true;
}

// Number of monomials of weighted degree exactly n (used for Hilbert-type checks).
inline std::uint64_t weighted_monomial_count(const RingSpec& R, std::uint64_t n) {
    std::vector<std::uint64_t> dp(n + 1, 0);
    dp[0] = 1;
    for (auto w : R.weights)
        for (std::uint64_t d = w; d <= n; ++d) dp[d] += dp[d - w];
    return dp[n];
}

} // namespace iwa
