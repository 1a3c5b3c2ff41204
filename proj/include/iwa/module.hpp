// module.hpp — finitely presented graded modules M = A^g / rowspan(rel),
// free resolutions via iterated Schreyer syzygies, and the Ext-based
// invariants (grade, Krull dimension) that the structure layer builds on.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwa/groebner.hpp"
#include "iwa/poly.hpp"

namespace iwa {

// A^g with generator degree shifts, modulo the row span of `rels` (each row
// has width `gens`).  Shifts record the weighted degree of each generator so
// homogeneity of the relations can be checked; they do not affect any of the
// algebra.
struct ModulePresentation {
  RingPtr ring;
  std::uint32_t gens = 0;
  std::vector<std::int64_t> shifts; // size == gens (zeros if defaulted)
  PolyMatrix rels;

  ModulePresentation() = default;
  ModulePresentation(RingPtr R, std::uint32_t g, PolyMatrix rows,
                     std::vector<std::int64_t> sh = {});

  void validate() const;
  bool is_homogeneous() const;
};

// Chain of free modules  F_len -> ... -> F_1 -> F_0  with M = coker(d_1).
// ranks[i] = rank F_i; diffs[i] is the matrix of d_{i+1} : F_{i+1} -> F_i in
// row convention (diffs[i].size() == ranks[i+1], each row of width ranks[i]).
struct FreeResolution {
  std::vector<std::uint32_t> ranks;
  std::vector<PolyMatrix> diffs;

  std::size_t length() const { return diffs.size(); }
};

PolyMatrix transpose(const RingPtr& R, const PolyMatrix& m, std::uint32_t width);

// Rank over Frac(A) by fraction-free (Bareiss) elimination.
std::uint32_t matrix_rank(const RingPtr& R, PolyMatrix m, std::uint32_t width);

// Free resolution by iterated Schreyer syzygies, then cancellation of unit
// entries (which also minimizes F_0 against d_1).  Checked property: length
// at most (number of variables) + 1 and d o d = 0.
FreeResolution free_resolution(const ModulePresentation& M);

bool is_zero_module(const ModulePresentation& M);

// Ext^i(M, A) as a finitely presented module (generators are kernel elements
// of the transposed differential, relations pull back the image block).
ModulePresentation ext_module(const ModulePresentation& M, std::uint32_t i,
                              const FreeResolution& res);
bool ext_is_zero(const ModulePresentation& M, std::uint32_t i, const FreeResolution& res);

// grade j(M) = min { i : Ext^i(M, A) != 0 };  nullopt encodes j(0) = +infinity.
std::optional<std::uint32_t> ext_grade(const ModulePresentation& M);

// annihilator ideal of M (Groebner basis; empty vector = zero ideal).
std::vector<GradedPoly> annihilator(const ModulePresentation& M);

// Krull dimension of supp(M) = V(ann M); throws on the zero module.
std::uint32_t krull_dimension(const ModulePresentation& M);
// dim A/I from a Groebner basis of I via maximal independent variable sets.
std::uint32_t dimension_of_quotient(const RingPtr& R, const std::vector<GradedPoly>& gb);

// generic rank dim_{Frac A} (M tensor Frac A) = gens - rank(rels).
std::uint32_t generic_rank(const ModulePresentation& M);
bool is_torsion(const ModulePresentation& M);

// Presentation of the submodule quotient (<V> + N)/N of M = A^g/N, where V
// holds the candidate generators as rows.
ModulePresentation subquotient(const RingPtr& R, const PolyMatrix& V, const PolyMatrix& N,
                               std::uint32_t width);

// Presentation of M/<V> for V rows in A^g (stack the rows onto the relations).
ModulePresentation quotient_by(const ModulePresentation& M, const PolyMatrix& V);

std::string module_str(const ModulePresentation& M);

} // namespace iwa
