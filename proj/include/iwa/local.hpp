// local.hpp — behaviour of a torsion module at its height-one primes: Fitting
// ideal valuations, local lengths and elementary divisors over the local
// discrete valuation rings, the characteristic ideal, and the certified
// cyclic decomposition up to pseudo-isomorphism.
#pragma once

#include <cstdint>
#include <vector>

#include "iwa/structure.hpp"

namespace iwa {

// v_P(f): the exact power of the monic irreducible `prime` dividing f.
// Throws std::domain_error on f = 0.
std::uint32_t prime_valuation(const GradedPoly& f, const GradedPoly& prime);

// v_P(Fitt_k(M)): minimum valuation over the (gens - k)-minors of the
// relation matrix.  Throws std::domain_error when Fitt_k(M) = 0 (all minors
// vanish), which cannot happen for torsion M and k >= 0.
std::uint32_t fitting_valuation(const ModulePresentation& M, const GradedPoly& prime,
                                std::uint32_t k);

// length of M_P over the DVR A_P; equals v_P(Fitt_0).
std::uint32_t local_length(const ModulePresentation& M, const GradedPoly& prime);

// Exponents e_1 >= e_2 >= ... with M_P isomorphic to the sum of A_P/(P^e_i):
// consecutive differences of the Fitting valuations.
std::vector<std::uint32_t> elementary_divisors(const ModulePresentation& M,
                                               const GradedPoly& prime);

// chi(M) = sum over W(M) of local_length * [P], with its generator.
struct CharIdeal {
  std::vector<std::pair<GradedPoly, std::uint32_t>> divisor; // (prime, length), sorted
  GradedPoly generator;                                      // product, 1 when empty
};
CharIdeal char_ideal(const ModulePresentation& M); // requires torsion

// Certified decomposition of Mbar = M / Delta^2(M) up to pseudo-isomorphism:
//   Mbar  ~  A/(L_1) + ... + A/(L_r),   L_1 | L_2 | ... | L_r,
// where L_k interleaves the k-th elementary divisors over all of W(M).
//
// `fitting_match` records that every Fitting valuation of Mbar agrees with
// the model sum (this is the proof that all local lengths match).  The
// witness search looks for elements w_i in Mbar with ann(w_i) = (L_i) whose
// joint cokernel is pseudo-null; together with `fitting_match` a successful
// witness tuple certifies the pseudo-isomorphism explicitly (equal local
// lengths force the kernel to vanish in height one).
struct StructureCertificate {
  ModulePresentation reduced;         // M / Delta^2
  std::vector<GradedPoly> elementary; // L_1 | ... | L_r (ascending divisibility)
  CharIdeal chi;
  bool fitting_match = false;
  bool witness_found = false;
  std::vector<PolyRow> witnesses; // one row per L_i when found
};

StructureCertificate structure_certificate(const ModulePresentation& M, std::uint64_t seed,
                                           int witness_tries = 200);

} // namespace iwa
