#include <stdexcept>

#include "iwa/structure.hpp"

namespace iwa {

namespace {

PolyMatrix identity_rows(const RingPtr& R, std::uint32_t g) {
  PolyMatrix rows(g, PolyRow(g, GradedPoly::zero(R)));
  for (std::uint32_t i = 0; i < g; ++i) rows[i][i] = GradedPoly::constant(R, 1);
  return rows;
}

// ann Ext^i(M, A) for i = 1 .. nvars; the unit ideal {1} stands in when
// Ext^i = 0 (including i beyond the resolution length)
std::vector<std::vector<GradedPoly>> ext_annihilators(const ModulePresentation& M) {
  const RingPtr& R = M.ring;
  const std::uint32_t n = static_cast<std::uint32_t>(R->nvars());
  FreeResolution res = free_resolution(M);
  std::vector<std::vector<GradedPoly>> anns(n + 1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (i > res.length()) {
      anns[i] = {GradedPoly::constant(R, 1)};
      continue;
    }
    ModulePresentation E = ext_module(M, i, res);
    anns[i] = annihilator(E);
    if (anns[i].empty())
      throw std::logic_error("ext_annihilators: Ext^i with i >= 1 must be torsion");
  }
  return anns;
}

PolyMatrix delta_from_annihilators(const ModulePresentation& M,
                                   const std::vector<std::vector<GradedPoly>>& anns,
                                   std::uint32_t q) {
  const RingPtr& R = M.ring;
  const std::uint32_t n = static_cast<std::uint32_t>(R->nvars());
  if (q == 0) return identity_rows(R, M.gens);
  if (q > n) return M.rels;
  std::vector<GradedPoly> b = anns[q];
  for (std::uint32_t i = q + 1; i <= n; ++i) b = ideal_intersect(R, b, anns[i]);
  return saturate_rows_by_ideal(R, M.rels, b, M.gens);
}

// saturation rows that add something beyond the relations
PolyMatrix fresh_rows(const RingPtr& R, const PolyMatrix& sat, const PolyMatrix& rels,
                      std::uint32_t width) {
  PolyMatrix gb = row_gb(R, rels, width);
  PolyMatrix out;
  for (const auto& r : sat)
    if (!row_in_span(R, r, gb)) out.push_back(r);
  return out;
}

} // namespace

bool is_pseudo_null(const ModulePresentation& M) {
  auto j = ext_grade(M);
  return !j.has_value() || *j >= 2;
}

PolyMatrix delta_submodule(const ModulePresentation& M, std::uint32_t q) {
  M.validate();
  const std::uint32_t n = static_cast<std::uint32_t>(M.ring->nvars());
  if (q == 0) return identity_rows(M.ring, M.gens);
  if (q > n) return M.rels;
  return delta_from_annihilators(M, ext_annihilators(M), q);
}

DimensionFiltration dimension_filtration(const ModulePresentation& M) {
  M.validate();
  const std::uint32_t n = static_cast<std::uint32_t>(M.ring->nvars());
  auto anns = ext_annihilators(M);
  DimensionFiltration F;
  F.delta.resize(n + 1);
  for (std::uint32_t q = 0; q <= n; ++q) F.delta[q] = delta_from_annihilators(M, anns, q);
  return F;
}

ModulePresentation torsion_submodule(const ModulePresentation& M) {
  PolyMatrix sat = delta_submodule(M, 1);
  return subquotient(M.ring, fresh_rows(M.ring, sat, M.rels, M.gens), M.rels, M.gens);
}

ModulePresentation pseudo_null_submodule(const ModulePresentation& M) {
  if (M.ring->nvars() < 2)
    throw std::invalid_argument("pseudo_null_submodule: needs at least two variables");
  PolyMatrix sat = delta_submodule(M, 2);
  return subquotient(M.ring, fresh_rows(M.ring, sat, M.rels, M.gens), M.rels, M.gens);
}

bool is_pure(const ModulePresentation& M) {
  M.validate();
  auto j = ext_grade(M);
  if (!j.has_value()) return true; // zero module
  const std::uint32_t n = static_cast<std::uint32_t>(M.ring->nvars());
  if (*j >= n) return true; // Delta^{n+1} is always zero
  PolyMatrix d = delta_submodule(M, *j + 1);
  return rows_equal_span(M.ring, d, M.rels, M.gens);
}

std::vector<GradedPoly> height_one_support(const ModulePresentation& M) {
  M.validate();
  if (is_zero_module(M)) return {};
  if (!is_torsion(M))
    throw std::invalid_argument("height_one_support: module has positive generic rank");
  std::vector<GradedPoly> ann = annihilator(M);
  if (ann.empty())
    throw std::logic_error("height_one_support: torsion module with zero annihilator");
  GradedPoly g = ann[0];
  for (std::size_t i = 1; i < ann.size() && !g.is_constant(); ++i) g = poly_gcd(g, ann[i]);
  if (g.is_constant()) return {};
  FactorResult fr = factor(g);
  if (fr.residual)
    throw std::runtime_error("height_one_support: factorization left an uncertified part");
  std::vector<GradedPoly> out;
  out.reserve(fr.factors.size());
  for (const auto& [q, m] : fr.factors) out.push_back(q);
  return out;
}

} // namespace iwa
