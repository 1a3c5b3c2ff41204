// factor.hpp — factorization over F_p: univariate Cantor–Zassenhaus and
// bivariate lifting along a good evaluation point.  Rings with more than two
// variables are rejected; the structure layer only factors in the
// two-variable graded setting.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "iwa/poly.hpp"

namespace iwa {

namespace uni {

// Dense univariate polynomial over F_p: coeffs[i] is the coefficient of x^i;
// normalized form has no trailing zero (zero polynomial = empty vector).
using UPoly = std::vector<std::uint32_t>;

UPoly trim(UPoly f);
inline bool is_zero(const UPoly& f) { return f.empty(); }
inline int deg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b, std::uint32_t p);
UPoly sub(const UPoly& a, const UPoly& b, std::uint32_t p);
UPoly scale(const UPoly& a, std::uint32_t c, std::uint32_t p);
UPoly mul(const UPoly& a, const UPoly& b, std::uint32_t p);
// division with remainder; the divisor's leading coefficient is inverted
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b, std::uint32_t p);
// exact quotient or nullopt
std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b, std::uint32_t p);
UPoly gcd(UPoly a, UPoly b, std::uint32_t p); // monic
UPoly monic(const UPoly& a, std::uint32_t p);
UPoly derivative(const UPoly& a, std::uint32_t p);
UPoly powmod(const UPoly& a, std::uint64_t e, const UPoly& f, std::uint32_t p);
std::uint32_t eval(const UPoly& a, std::uint32_t x, std::uint32_t p);
bool is_squarefree(const UPoly& a, std::uint32_t p);

// monic irreducible factors with multiplicities, plus the leading unit
struct UniFactors {
  std::uint32_t unit = 1;
  std::vector<std::pair<UPoly, std::uint32_t>> factors;
};
UniFactors factor(const UPoly& f, std::uint32_t p);

} // namespace uni

// f = unit * prod factors[i].first ^ factors[i].second * (residual or 1).
// Factors are monic (leading coefficient 1 in the ring order) irreducibles,
// sorted deterministically.  `residual` is only set in the corner case where
// no evaluation point in F_p separates the factors in either variable; it is
// a certified-composite-or-unknown leftover, never silently dropped.
struct FactorResult {
  std::uint32_t unit = 1;
  std::vector<std::pair<GradedPoly, std::uint32_t>> factors;
  std::optional<GradedPoly> residual;
};

FactorResult factor(const GradedPoly& f);

// gcd up to units, returned monic; works for one or two variables.
GradedPoly poly_gcd(const GradedPoly& a, const GradedPoly& b);

// true iff factor() certifies a single multiplicity-one factor equal to f (up
// to a unit); throws if a residual prevents the certificate.
bool is_irreducible(const GradedPoly& f);

} // namespace iwa
