#include "iwa/module.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace iwa {

ModulePresentation::ModulePresentation(RingPtr R, std::uint32_t g, PolyMatrix rows,
                                       std::vector<std::int64_t> sh)
    : ring(std::move(R)), gens(g), shifts(std::move(sh)), rels(std::move(rows)) {
  if (shifts.empty()) shifts.assign(gens, 0);
  validate();
}

void ModulePresentation::validate() const {
  if (!ring) throw std::invalid_argument("module: null ring");
  if (shifts.size() != gens) throw std::invalid_argument("module: shift count != gens");
  for (const auto& row : rels) {
    if (row.size() != gens) throw std::invalid_argument("module: relation width != gens");
    for (const auto& f : row)
      if (!f.ring() || *f.ring() != *ring)
        throw std::invalid_argument("module: ring mismatch in relation");
  }
}

bool ModulePresentation::is_homogeneous() const {
  for (const auto& row : rels) {
    bool seen = false;
    std::int64_t deg = 0;
    for (std::uint32_t j = 0; j < gens; ++j) {
      if (row[j].is_zero()) continue;
      if (!row[j].is_homogeneous()) return false;
      std::int64_t d = static_cast<std::int64_t>(row[j].degree()) + shifts[j];
      if (!seen) {
        deg = d;
        seen = true;
      } else if (d != deg) {
        return false;
      }
    }
  }
  return true;
}

PolyMatrix transpose(const RingPtr& R, const PolyMatrix& m, std::uint32_t width) {
  PolyMatrix out(width, PolyRow(m.size(), GradedPoly::zero(R)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::uint32_t j = 0; j < width; ++j) out[j][i] = m[i][j];
  return out;
}

std::uint32_t matrix_rank(const RingPtr& R, PolyMatrix a, std::uint32_t width) {
  for (const auto& row : a)
    if (row.size() != width) throw std::invalid_argument("matrix_rank: ragged matrix");
  std::uint32_t r = 0;
  GradedPoly prev = GradedPoly::constant(R, 1);
  for (std::uint32_t c = 0; c < width && r < a.size(); ++c) {
    // pivot: smallest (term count, degree) nonzero entry in column c at or
    // below row r -- cheap entries keep the Bareiss minors small
    std::size_t piv = a.size();
    for (std::size_t i = r; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      if (piv == a.size() ||
          std::make_pair(a[i][c].size(), a[i][c].degree()) <
              std::make_pair(a[piv][c].size(), a[piv][c].degree()))
        piv = i;
    }
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::uint32_t j = c + 1; j < width; ++j) {
        GradedPoly num = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        auto q = GradedPoly::divide_exact(num, prev);
        if (!q) throw std::logic_error("matrix_rank: Bareiss division failed");
        a[i][j] = *q;
      }
      a[i][c] = GradedPoly::zero(R);
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

namespace {

// Presort a Groebner basis before taking Schreyer syzygies: position first,
// then leading exponents in decreasing lexicographic order.  With this
// arrangement each syzygy level involves strictly fewer variables in its
// leading terms, which bounds the number of levels.
void sort_for_schreyer(std::vector<ModVec>& gb) {
  std::sort(gb.begin(), gb.end(), [](const ModVec& x, const ModVec& y) {
    const MTerm& a = x.lt();
    const MTerm& b = y.lt();
    if (a.pos != b.pos) return a.pos < b.pos;
    for (std::size_t k = 0; k < a.e.size(); ++k)
      if (a.e[k] != b.e[k]) return a.e[k] > b.e[k];
    return false;
  });
}

bool row_is_zero(const PolyRow& row) {
  return std::all_of(row.begin(), row.end(), [](const GradedPoly& f) { return f.is_zero(); });
}

// Cancel one unit entry diffs[i][r][c] from the chain, adjusting the
// neighbouring differentials for the induced basis changes.
void cancel_unit(FreeResolution& res, std::size_t i, std::size_t r, std::size_t c,
                 const RingPtr& R) {
  PolyMatrix& D = res.diffs[i];
  const std::uint32_t p = R->p;
  const GradedPoly inv_u = GradedPoly::constant(R, fp::inv(D[r][c].lc(), p));

  // clear column c with row operations; mirror the F_{i+1} basis change on
  // the next differential (new e_r coordinate picks up the multiples)
  std::vector<GradedPoly> q(D.size(), GradedPoly::zero(R));
  for (std::size_t r2 = 0; r2 < D.size(); ++r2) {
    if (r2 == r || D[r2][c].is_zero()) continue;
    q[r2] = D[r2][c] * inv_u;
    for (std::size_t j = 0; j < D[r2].size(); ++j) D[r2][j] -= q[r2] * D[r][j];
  }
  if (i + 1 < res.diffs.size()) {
    PolyMatrix& E = res.diffs[i + 1];
    for (auto& row : E) {
      for (std::size_t r2 = 0; r2 < D.size(); ++r2)
        if (r2 != r && !q[r2].is_zero()) row[r] += q[r2] * row[r2];
      if (!row[r].is_zero())
        throw std::logic_error("free_resolution: cancellation left a nonzero column");
    }
    for (auto& row : E) row.erase(row.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // clear row r with column operations; mirror the F_i basis change on the
  // previous differential (its row c absorbs the multiples, then leaves)
  if (i > 0) {
    PolyMatrix& C = res.diffs[i - 1];
    for (std::size_t c2 = 0; c2 < D[r].size(); ++c2) {
      if (c2 == c || D[r][c2].is_zero()) continue;
      GradedPoly mu = D[r][c2] * inv_u;
      for (std::size_t k = 0; k < C[c].size(); ++k) C[c][k] += mu * C[c2][k];
    }
    C.erase(C.begin() + static_cast<std::ptrdiff_t>(c));
  }

  D.erase(D.begin() + static_cast<std::ptrdiff_t>(r));
  for (auto& row : D) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
  res.ranks[i + 1] -= 1;
  res.ranks[i] -= 1;
}

void prune_resolution(FreeResolution& res, const RingPtr& R) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < res.diffs.size() && !changed; ++i) {
      PolyMatrix& D = res.diffs[i];
      for (std::size_t r = 0; r < D.size() && !changed; ++r)
        for (std::size_t c = 0; c < D[r].size() && !changed; ++c)
          if (!D[r][c].is_zero() && D[r][c].is_constant()) {
            cancel_unit(res, i, r, c, R);
            changed = true;
          }
    }
  }
  while (!res.diffs.empty() && res.diffs.back().empty()) {
    res.diffs.pop_back();
    res.ranks.pop_back();
  }
  for (const auto& D : res.diffs)
    for (const auto& row : D)
      if (row_is_zero(row))
        throw std::logic_error("free_resolution: zero row survived pruning");
}

void check_complex(const FreeResolution& res, const RingPtr& R) {
  for (std::size_t i = 0; i + 1 < res.diffs.size(); ++i) {
    const PolyMatrix& E = res.diffs[i + 1];
    const PolyMatrix& D = res.diffs[i];
    for (const auto& row : E) {
      PolyRow acc(res.ranks[i], GradedPoly::zero(R));
      for (std::size_t k = 0; k < D.size(); ++k) {
        if (row[k].is_zero()) continue;
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += row[k] * D[k][j];
      }
      if (!row_is_zero(acc)) throw std::logic_error("free_resolution: d o d != 0");
    }
  }
}

} // namespace

FreeResolution free_resolution(const ModulePresentation& M) {
  M.validate();
  const RingPtr& R = M.ring;
  FreeResolution res;
  res.ranks.push_back(M.gens);

  auto base = std::make_shared<const ModOrder>(ModOrder::top(*R));
  std::vector<ModVec> vecs;
  for (const auto& row : M.rels) {
    if (row_is_zero(row)) continue;
    vecs.push_back(ModVec::from_row(R, row, *base));
  }
  std::vector<ModVec> gb = buchberger(vecs, *base);
  if (gb.empty()) return res;
  sort_for_schreyer(gb);

  auto push_level = [&res](const std::vector<ModVec>& level) {
    PolyMatrix rows;
    rows.reserve(level.size());
    for (const auto& v : level) rows.push_back(v.to_row());
    res.ranks.push_back(static_cast<std::uint32_t>(level.size()));
    res.diffs.push_back(std::move(rows));
  };
  push_level(gb);

  std::shared_ptr<const ModOrder> order = base;
  std::vector<ModVec> cur = std::move(gb);
  const std::size_t cap = R->vars.size() + 3;
  for (;;) {
    if (res.diffs.size() > cap)
      throw std::logic_error("free_resolution: syzygy chain failed to terminate");
    std::shared_ptr<const ModOrder> syz_order;
    std::vector<ModVec> syz = schreyer_syzygies(cur, order, syz_order);
    if (syz.empty()) break;
    sort_for_schreyer(syz);
    push_level(syz);
    cur = std::move(syz);
    order = syz_order;
  }
  prune_resolution(res, R);
  check_complex(res, R);
  return res;
}

bool is_zero_module(const ModulePresentation& M) {
  if (M.gens == 0) return true;
  PolyMatrix basis;
  for (std::uint32_t i = 0; i < M.gens; ++i) {
    PolyRow e(M.gens, GradedPoly::zero(M.ring));
    e[i] = GradedPoly::constant(M.ring, 1);
    basis.push_back(std::move(e));
  }
  return rows_subset(M.ring, basis, M.rels, M.gens);
}

namespace {

// kernel generators of the transposed differential out of F_i, and the image
// rows of the transposed differential into F_i
void ext_blocks(const ModulePresentation& M, std::uint32_t i, const FreeResolution& res,
                PolyMatrix& kernel, PolyMatrix& image, std::uint32_t& n_i) {
  const RingPtr& R = M.ring;
  const std::size_t len = res.length();
  n_i = (i <= len) ? res.ranks[i] : 0;
  kernel.clear();
  image.clear();
  if (n_i == 0) return;
  if (i < len) {
    PolyMatrix dual = transpose(R, res.diffs[i], res.ranks[i]); // n_i rows, width n_{i+1}
    kernel = syzygies_of(R, dual, res.ranks[i + 1]);
  } else {
    for (std::uint32_t k = 0; k < n_i; ++k) {
      PolyRow e(n_i, GradedPoly::zero(R));
      e[k] = GradedPoly::constant(R, 1);
      kernel.push_back(std::move(e));
    }
  }
  if (i >= 1) image = transpose(R, res.diffs[i - 1], res.ranks[i - 1]);
}

} // namespace

ModulePresentation ext_module(const ModulePresentation& M, std::uint32_t i,
                              const FreeResolution& res) {
  const RingPtr& R = M.ring;
  PolyMatrix kernel, image;
  std::uint32_t n_i = 0;
  ext_blocks(M, i, res, kernel, image, n_i);
  if (n_i == 0 || kernel.empty()) return ModulePresentation(R, 0, {});

  const std::uint32_t s = static_cast<std::uint32_t>(kernel.size());
  PolyMatrix stacked = kernel;
  for (const auto& row : image) stacked.push_back(row);
  PolyMatrix syz = syzygies_of(R, stacked, n_i);
  PolyMatrix rels;
  for (const auto& z : syz) {
    PolyRow head(z.begin(), z.begin() + s);
    if (!row_is_zero(head)) rels.push_back(std::move(head));
  }
  return ModulePresentation(R, s, std::move(rels));
}

bool ext_is_zero(const ModulePresentation& M, std::uint32_t i, const FreeResolution& res) {
  PolyMatrix kernel, image;
  std::uint32_t n_i = 0;
  ext_blocks(M, i, res, kernel, image, n_i);
  if (n_i == 0 || kernel.empty()) return true;
  return rows_subset(M.ring, kernel, image, n_i);
}

std::optional<std::uint32_t> ext_grade(const ModulePresentation& M) {
  if (is_zero_module(M)) return std::nullopt; // j(0) = +infinity
  FreeResolution res = free_resolution(M);
  for (std::uint32_t i = 0; i <= res.length(); ++i)
    if (!ext_is_zero(M, i, res)) return i;
  throw std::logic_error("ext_grade: no nonvanishing Ext up to resolution length");
}

std::vector<GradedPoly> annihilator(const ModulePresentation& M) {
  const RingPtr& R = M.ring;
  if (is_zero_module(M)) return {GradedPoly::constant(R, 1)};
  std::vector<GradedPoly> acc;
  bool first = true;
  for (std::uint32_t i = 0; i < M.gens; ++i) {
    PolyRow e(M.gens, GradedPoly::zero(R));
    e[i] = GradedPoly::constant(R, 1);
    std::vector<GradedPoly> col = colon_rows_into_ideal(R, M.rels, e, M.gens);
    acc = first ? std::move(col) : ideal_intersect(R, acc, col);
    first = false;
    if (acc.empty()) return acc; // zero ideal already
  }
  return acc;
}

std::uint32_t dimension_of_quotient(const RingPtr& R, const std::vector<GradedPoly>& gb) {
  const std::size_t n = R->vars.size();
  std::vector<Expo> lts;
  for (const auto& f : gb) {
    if (f.is_zero()) continue;
    if (f.is_constant()) throw std::invalid_argument("dimension_of_quotient: unit ideal");
    lts.push_back(f.lm());
  }
  std::uint32_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& e : lts) {
      bool inside = true;
      for (std::size_t v = 0; v < n; ++v)
        if (e[v] > 0 && !(mask & (1u << v))) {
          inside = false;
          break;
        }
      if (inside) { // a leading monomial lives entirely on S: S is dependent
        independent = false;
        break;
      }
    }
    if (independent) best = std::max<std::uint32_t>(best, std::popcount(mask));
  }
  return best;
}

std::uint32_t krull_dimension(const ModulePresentation& M) {
  if (is_zero_module(M)) throw std::invalid_argument("krull_dimension: zero module");
  std::vector<GradedPoly> ann = annihilator(M);
  return dimension_of_quotient(M.ring, ann);
}

std::uint32_t generic_rank(const ModulePresentation& M) {
  return M.gens - matrix_rank(M.ring, M.rels, M.gens);
}

bool is_torsion(const ModulePresentation& M) { return generic_rank(M) == 0; }

ModulePresentation subquotient(const RingPtr& R, const PolyMatrix& V, const PolyMatrix& N,
                               std::uint32_t width) {
  const std::uint32_t k = static_cast<std::uint32_t>(V.size());
  if (k == 0) return ModulePresentation(R, 0, {});
  PolyMatrix stacked = V;
  for (const auto& row : N) stacked.push_back(row);
  PolyMatrix syz = syzygies_of(R, stacked, width);
  PolyMatrix rels;
  for (const auto& z : syz) {
    PolyRow head(z.begin(), z.begin() + k);
    if (!row_is_zero(head)) rels.push_back(std::move(head));
  }
  return ModulePresentation(R, k, std::move(rels));
}

ModulePresentation quotient_by(const ModulePresentation& M, const PolyMatrix& V) {
  PolyMatrix rels = M.rels;
  for (const auto& row : V) {
    if (row.size() != M.gens) throw std::invalid_argument("quotient_by: width mismatch");
    rels.push_back(row);
  }
  return ModulePresentation(M.ring, M.gens, std::move(rels), M.shifts);
}

std::string module_str(const ModulePresentation& M) {
  std::ostringstream os;
  os << "A^" << M.gens << " /";
  if (M.rels.empty()) os << " 0";
  for (const auto& row : M.rels) {
    os << " [";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ", ";
      os << row[j].str();
    }
    os << "]";
  }
  return os.str();
}

} // namespace iwa
