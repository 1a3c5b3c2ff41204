// groebner.hpp — Buchberger engine over free modules A^k, with sugar-guided
// pair selection and the classical treated-pair elimination.  Ideals are the
// rank-one case.  No signature-based (F4/F5) machinery: completion plus an
// exhaustive reduction criterion is what the test layer certifies against.
#pragma once

#include <memory>
#include <vector>

#include "iwa/modvec.hpp"

namespace iwa {

// Full normal form of v against `basis` (elements need not be monic).  The
// reducer chosen at each step is the first basis element, in the given order
// of the vector, whose leading term divides the term under inspection; this
// fixed strategy keeps runs reproducible.  If `quotients` is non-null it
// receives one polynomial per basis element with
//   v = sum_i quotients[i] * basis[i] + remainder.
ModVec normal_form(const ModVec& v, const std::vector<ModVec>& basis, const ModOrder& O,
                   std::vector<GradedPoly>* quotients = nullptr);

// Reduced Groebner basis of the submodule generated by `gens`: monic, fully
// tail-reduced, sorted by decreasing leading term.
std::vector<ModVec> buchberger(const std::vector<ModVec>& gens, const ModOrder& O);

// Exhaustive Buchberger criterion (every S-vector reduces to zero); used by
// the tests as an oracle, with no pair elimination at all.
bool buchberger_criterion_holds(const std::vector<ModVec>& gb, const ModOrder& O);

bool in_span(const ModVec& v, const std::vector<ModVec>& gb, const ModOrder& O);

// Syzygies of a monic Groebner basis via Schreyer's construction.  The result
// is itself a Groebner basis with respect to the Schreyer order induced by
// `order` and the leading terms of `gb`; that order is returned through
// `syz_order`.  Zero syzygies are dropped.
std::vector<ModVec> schreyer_syzygies(const std::vector<ModVec>& gb,
                                      std::shared_ptr<const ModOrder> order,
                                      std::shared_ptr<const ModOrder>& syz_order);

// ---- row-matrix conveniences (order-free API used by the higher layers) ----

using PolyRow = std::vector<GradedPoly>;
using PolyMatrix = std::vector<PolyRow>;

// Generating syzygies of arbitrary vectors in A^g (rows of `vectors`),
// computed by block elimination in A^{g+k}.
PolyMatrix syzygies_of(const RingPtr& R, const PolyMatrix& vectors, std::uint32_t width);

// Membership of v in the row span.
bool row_in_span(const RingPtr& R, const PolyRow& v, const PolyMatrix& vectors);

// Groebner basis of the row span under the TOP order, as rows.
PolyMatrix row_gb(const RingPtr& R, const PolyMatrix& vectors, std::uint32_t width);

bool rows_subset(const RingPtr& R, const PolyMatrix& sub, const PolyMatrix& super,
                 std::uint32_t width);
bool rows_equal_span(const RingPtr& R, const PolyMatrix& a, const PolyMatrix& b,
                     std::uint32_t width);

// (V : f) = { w in A^g : f*w in span(V) }.
PolyMatrix colon_rows_by_poly(const RingPtr& R, const PolyMatrix& V, const GradedPoly& f,
                              std::uint32_t width);
// (V : f^inf), stabilized colon iteration.
PolyMatrix saturate_rows_by_poly(const RingPtr& R, const PolyMatrix& V, const GradedPoly& f,
                                 std::uint32_t width);
// (V : I^inf) for an ideal I = (b_1, ..., b_r): the intersection of the
// single-element saturations.
PolyMatrix saturate_rows_by_ideal(const RingPtr& R, const PolyMatrix& V,
                                  const std::vector<GradedPoly>& ideal, std::uint32_t width);

PolyMatrix intersect_rows(const RingPtr& R, const PolyMatrix& V, const PolyMatrix& W,
                          std::uint32_t width);

// { a in A : a*u in span(V) }.
std::vector<GradedPoly> colon_rows_into_ideal(const RingPtr& R, const PolyMatrix& V,
                                              const PolyRow& u, std::uint32_t width);

// ---- ideal-level wrappers (rank one) ----

std::vector<GradedPoly> groebner_basis(const std::vector<GradedPoly>& gens);
GradedPoly normal_form(const GradedPoly& f, const std::vector<GradedPoly>& basis);
bool ideal_member(const GradedPoly& f, const std::vector<GradedPoly>& gb);
std::vector<GradedPoly> ideal_intersect(const RingPtr& R, const std::vector<GradedPoly>& I,
                                        const std::vector<GradedPoly>& J);
bool ideal_equal(const RingPtr& R, const std::vector<GradedPoly>& I,
                 const std::vector<GradedPoly>& J);
// (I : f)
std::vector<GradedPoly> ideal_quotient(const RingPtr& R, const std::vector<GradedPoly>& I,
                                       const GradedPoly& f);

} // namespace iwa
