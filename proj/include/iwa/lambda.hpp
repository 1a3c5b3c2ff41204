// lambda.hpp — finitely presented torsion modules over Lambda = Z_p[[T]]:
// mu/lambda invariants and the characteristic ideal via gcds of maximal
// minors, plus the bridge to the graded layer (gr Lambda = F_p[X0, X1] with
// X0 the symbol of p and X1 the symbol of T, both of weight one).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwa/module.hpp"
#include "iwa/padic.hpp"
#include "iwa/poly.hpp"
#include "iwa/ring.hpp"

namespace iwa {

// Lambda^gens modulo the row span of `rels` (each row has width `gens`).
// Entries share one prime and one joint precision (p^a, T^b); the module
// functions work at the smallest precision present in the matrix.  `shifts`
// assigns a filtration shift to each generator, as in the graded layer: the
// filtration on the free module is F_n = sum_c F_{n - shifts[c]} * e_c.
struct LambdaModule {
  std::uint32_t p = 0;
  std::uint32_t gens = 0;
  std::vector<std::int64_t> shifts; // size == gens (zeros if defaulted)
  std::vector<std::vector<PadicSeries>> rels;

  LambdaModule() = default;
  LambdaModule(std::uint32_t p, std::uint32_t gens,
               std::vector<std::vector<PadicSeries>> rows,
               std::vector<std::int64_t> sh = {});

  void validate() const;
  // smallest (a, b) over all entries; (0, 0) for an empty matrix
  std::pair<std::uint32_t, std::uint32_t> precision() const;
};

// Characteristic data of a torsion module: char(M) = (p)^mu * (F) with F the
// distinguished gcd of the maximal minors of the relation matrix.  `factors`
// is the slope factorization of F; entries with certified_irreducible false
// are unresolved residue factors, not certified primes.
struct LambdaChar {
  std::uint32_t mu = 0;
  std::uint32_t lambda = 0;            // deg F
  std::vector<std::uint64_t> dist;     // F itself, monic, size lambda + 1
  std::uint32_t aprec = 0;             // certified p-precision of the claim
  std::vector<SlopeFactor> factors;    // empty when lambda == 0

  std::string str() const;
};

// mu/lambda of a torsion module.  Throws std::invalid_argument when no
// maximal minor is nonzero within precision (the module is not visibly
// torsion), and PrecisionError when a gcd step cannot be certified.
LambdaChar mu_lambda(const LambdaModule& M);

// True iff the gcd of the maximal minors is a unit of Lambda.  Same error
// contract as mu_lambda.
bool lambda_is_pseudo_null(const LambdaModule& M);

// The associated graded ring of Lambda for the (p, T)-adic filtration, as a
// weighted polynomial ring F_p[X0, X1] with both weights one.
RingPtr gr_lambda_ring(std::uint32_t p);

// Initial form of x in gr Lambda: the sum of the minimal-value digits
// p^j T^i |-> X0^j X1^i.  Multiplicative.  Requires a certified value, i.e.
// val(x) < min(a*w0, b*w1); throws PrecisionError otherwise (and for x = 0
// within precision, which has no initial form).
GradedPoly principal_symbol(const RingPtr& R, const PadicSeries& x);

// Associated graded module for the good filtration given by M.shifts: the
// presentation of gr(Lambda)^gens by the initial forms of a standard basis
// of the relation module.  `value_bound` is the certificate: every graded
// piece of value below it is exact.  `unresolved` counts reduction residues
// that reached the bound while still nonzero; the pieces below the bound are
// exact regardless, but a nonzero count means the presentation may be
// missing generators of value >= value_bound (callers with exact inputs can
// rebuild at higher precision to push the bound out).  Throws PrecisionError
// when the initial form of a relation row itself cannot be certified, i.e.
// the whole row sits at or beyond the precision window.
struct GradedBridge {
  ModulePresentation pres;
  std::int64_t value_bound = 0;
  std::uint32_t unresolved = 0;
};
GradedBridge associated_graded(const LambdaModule& M);

// Height-one support of the associated graded module for the filtration
// shifted by `shifts` (empty means all zero).  This is the graded-side
// support W of M; by shift invariance it does not depend on `shifts`.
std::vector<GradedPoly> good_filtration_W(const LambdaModule& M,
                                          const std::vector<std::int64_t>& shifts = {});

} // namespace iwa
