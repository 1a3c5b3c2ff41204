// fp.hpp — arithmetic in the prime field F_p for machine-word p.
#pragma once

#include <cstdint>
#include <stdexcept>

namespace iwa {

// Coefficients are stored reduced to [0, p).  p must fit in 31 bits so that
// products fit in uint64_t.
namespace fp {

inline bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("fp::inv: division by zero");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

inline std::uint32_t div(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return mul(a, inv(b, p), p);
}

} // namespace fp
} // namespace iwa
