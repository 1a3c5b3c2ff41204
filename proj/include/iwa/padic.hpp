// padic.hpp — exact arithmetic in Z_p[[T]] at joint finite precision
// (p^a, T^b), Weierstrass division and preparation, gcd of distinguished
// parts, Newton polygons and slope factorization of distinguished
// polynomials.
//
// Precision model: a PadicSeries stores coefficients of 1, T, ..., T^{b-1}
// as residues mod p^a; the element is known modulo the ideal
// (p^a, T^b).  Every operation propagates (a, b) soundly; anything that
// cannot be certified at the available precision throws PrecisionError
// rather than returning a best guess.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iwa {

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// p^a as uint64, validated to leave headroom for 128-bit products
std::uint64_t padic_modulus(std::uint32_t p, std::uint32_t a);
std::uint32_t padic_val(std::uint64_t x, std::uint32_t p, std::uint32_t a); // v_p; a when x = 0
std::uint64_t padic_inv(std::uint64_t x, std::uint32_t p, std::uint32_t a); // unit inverse mod p^a

class PadicSeries {
public:
  PadicSeries() = default;
  PadicSeries(std::uint32_t p, std::uint32_t aprec, std::uint32_t bprec);
  static PadicSeries from_coeffs(std::uint32_t p, std::uint32_t aprec, std::uint32_t bprec,
                                 const std::vector<std::int64_t>& coeffs);

  std::uint32_t p() const { return p_; }
  std::uint32_t aprec() const { return a_; }
  std::uint32_t bprec() const { return b_; }
  std::uint64_t pmod() const { return pmod_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(std::uint32_t i) const; // throws past bprec

  void set_coeff(std::uint32_t i, std::uint64_t v);

  bool is_zero() const; // zero within the stored precision

  PadicSeries operator+(const PadicSeries& o) const;
  PadicSeries operator-(const PadicSeries& o) const;
  PadicSeries operator*(const PadicSeries& o) const;
  PadicSeries scaled(std::int64_t n) const;

  // truncate/extend the T-precision (extension only pads unknown tail)
  PadicSeries with_bprec(std::uint32_t b) const;
  PadicSeries with_aprec(std::uint32_t a) const; // only reduction allowed

  // min over stored coefficients of v_p(c_i); nullopt when 0 within precision
  std::optional<std::uint32_t> vp_content() const;
  // T-order of the reduction mod p^{a}; nullopt when 0 within precision
  std::optional<std::uint32_t> ordT() const;
  // joint valuation min_i (v_p(c_i) + i), certified exact only when below
  // min(aprec, bprec); nullopt means ">= min(a, b)"
  std::optional<std::uint32_t> val() const;

  // divide every coefficient by p^k exactly; aprec drops by k
  PadicSeries div_by_p(std::uint32_t k) const;
  // multiplicative inverse when the constant coefficient is a unit
  PadicSeries inverse() const;

  std::vector<std::uint32_t> reduce_mod_p() const; // dense, may keep zero tail trimmed

  std::string str() const; // e.g. "3 + 2*T^2 + O(3^12, T^20)"

private:
  std::uint32_t p_ = 0, a_ = 0, b_ = 0;
  std::uint64_t pmod_ = 0;
  std::vector<std::uint64_t> c_;
  void check_compatible(const PadicSeries& o) const;
};

// f = p^mu * unit * dist with dist monic distinguished of degree lambda
// (all lower coefficients divisible by p); unit carries the reduced
// precision aprec(f) - mu.
struct WeierstrassData {
  std::uint32_t mu = 0;
  std::uint32_t lambda = 0;
  std::vector<std::uint64_t> dist; // size lambda + 1, dist[lambda] = 1
  PadicSeries unit;
};

// q, r with g = q*f + r and deg_T r < lambda(f); f must have a unit
// coefficient within the T-window.
std::pair<PadicSeries, PadicSeries> weierstrass_divide(const PadicSeries& g,
                                                       const PadicSeries& f);
WeierstrassData weierstrass_prepare(const PadicSeries& f);

// gcd up to units: p^mu times a monic distinguished polynomial, reported at
// the precision that survived the Euclidean remainder sequence.
struct LambdaGcd {
  std::uint32_t mu = 0;
  std::vector<std::uint64_t> dist; // monic; {1} for the unit ideal
  std::uint32_t aprec = 0;
};
LambdaGcd lambda_gcd(const PadicSeries& f, const PadicSeries& g);

// Lower Newton polygon of a monic polynomial over Z_p: segments with slope
// num/den (nonnegative, lowest terms) and horizontal width, ascending by
// slope.  Certified against the p-adic precision of the coefficients.
struct NewtonSegment {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::uint32_t width = 0;
};
std::vector<NewtonSegment> newton_polygon(std::uint32_t p, std::uint32_t aprec,
                                          const std::vector<std::uint64_t>& poly);

// Factorization of a monic (distinguished) polynomial along its Newton
// polygon: vertex splits by Newton iteration on the coefficient system, then
// mod-p splits (and p-power rescaling for integer slopes) inside slope
// classes.  Every returned factor is monic with a single-slope polygon;
// `certified_irreducible` marks the cases the rational theory can certify
// (slope h/w in lowest terms with w = deg, or slope zero with irreducible
// reduction mod p).
// den = 0 encodes the factor T (slope infinity).  `aprec` is the p-adic
// precision that survived rescaling and elimination for this factor.
struct SlopeFactor {
  std::vector<std::uint64_t> poly;
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::uint32_t mult = 1;
  std::uint32_t aprec = 0;
  bool certified_irreducible = false;
};
std::vector<SlopeFactor> slope_factorization(std::uint32_t p, std::uint32_t aprec,
                                             const std::vector<std::uint64_t>& poly);

// polynomial helpers over Z/p^a (dense, trailing zeros trimmed)
namespace pp {
std::vector<std::uint64_t> trim(std::vector<std::uint64_t> f);
std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a,
                               const std::vector<std::uint64_t>& b, std::uint32_t p,
                               std::uint32_t aprec);
// division by a monic polynomial
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> divrem_monic(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, std::uint32_t p,
    std::uint32_t aprec);
} // namespace pp

} // namespace iwa
