#include "iwa/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace iwa {

namespace {

// sugar degree of a vector: max weighted degree over all terms, ignoring
// position.  Purely a selection heuristic.
std::uint64_t sugar_of(const ModVec& v) {
  std::uint64_t s = 0;
  for (const auto& t : v.terms()) s = std::max(s, wdeg(t.e, *v.ring()));
  return s;
}

struct Pair {
  std::uint32_t i, j;         // indices into the working basis, i < j
  std::uint32_t pos;          // common leading position
  Expo lcm;                   // lcm of the leading monomials
  std::uint64_t lcm_deg;
  std::uint64_t sugar;
};

// Selection: least sugar, then least lcm degree, then lexicographic index.
bool pair_before(const Pair& a, const Pair& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

Pair make_pair(std::uint32_t i, std::uint32_t j, const std::vector<ModVec>& G,
               const std::vector<std::uint64_t>& sug, const RingSpec& R) {
  const MTerm& a = G[i].lt();
  const MTerm& b = G[j].lt();
  Pair p;
  p.i = i;
  p.j = j;
  p.pos = a.pos;
  p.lcm = mono_lcm(a.e, b.e);
  p.lcm_deg = wdeg(p.lcm, R);
  p.sugar = std::max(sug[i] + p.lcm_deg - wdeg(a.e, R), sug[j] + p.lcm_deg - wdeg(b.e, R));
  return p;
}

ModVec s_vector(const ModVec& f, const ModVec& g, const Expo& lcm, const ModOrder& O) {
  const RingSpec& R = *f.ring();
  const MTerm& a = f.lt();
  const MTerm& b = g.lt();
  // c_a^{-1} x^{lcm/a} f - c_b^{-1} x^{lcm/b} g
  ModVec lhs = f.term_mul(mono_div(lcm, a.e), fp::inv(a.c, R.p));
  ModVec rhs = g.term_mul(mono_div(lcm, b.e), fp::inv(b.c, R.p));
  return lhs.sub(rhs, O);
}

// Minimalize + tail-reduce a basis that already satisfies the Buchberger
// criterion.  Output monic, sorted by decreasing leading term.
std::vector<ModVec> interreduce(std::vector<ModVec> G, const ModOrder& O) {
  G.erase(std::remove_if(G.begin(), G.end(), [](const ModVec& v) { return v.is_zero(); }),
          G.end());
  std::sort(G.begin(), G.end(),
            [&O](const ModVec& a, const ModVec& b) { return O.cmp(a.lt(), b.lt()) < 0; });
  // drop elements whose leading term is divisible by an earlier (or any other
  // kept) leading term
  std::vector<ModVec> minimal;
  for (const auto& g : G) {
    bool redundant = false;
    for (const auto& h : minimal) {
      if (h.lt().pos == g.lt().pos && mono_divides(h.lt().e, g.lt().e)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  // full tail reduction of each element against the others
  std::vector<ModVec> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<ModVec> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    ModVec r = normal_form(minimal[k], others, O);
    if (!r.is_zero()) out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(),
            [&O](const ModVec& a, const ModVec& b) { return O.cmp(a.lt(), b.lt()) > 0; });
  return out;
}

} // namespace

ModVec normal_form(const ModVec& v, const std::vector<ModVec>& basis, const ModOrder& O,
                   std::vector<GradedPoly>* quotients) {
  const RingPtr& R = v.ring();
  const std::uint32_t p = R->p;
  if (quotients) quotients->assign(basis.size(), GradedPoly::zero(R));
  ModVec rem(R, v.rank());
  ModVec cur = v;
  while (!cur.is_zero()) {
    const MTerm head = cur.lt();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const ModVec& b = basis[i];
      if (b.is_zero()) continue;
      const MTerm& bl = b.lt();
      if (bl.pos != head.pos || !mono_divides(bl.e, head.e)) continue;
      const Expo m = mono_div(head.e, bl.e);
      const std::uint32_t c = fp::mul(head.c, fp::inv(bl.c, p), p);
      cur = cur.sub(b.term_mul(m, c), O);
      if (quotients)
        (*quotients)[i] += GradedPoly::monomial(R, m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      // move the irreducible head into the remainder and continue on the tail
      rem = rem.add(ModVec(R, v.rank(), {head}, O), O);
      cur = cur.sub(ModVec(R, v.rank(), {head}, O), O);
    }
  }
  return rem;
}

std::vector<ModVec> buchberger(const std::vector<ModVec>& gens, const ModOrder& O) {
  std::vector<ModVec> G;
  std::vector<std::uint64_t> sug;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    G.push_back(g.monic());
    sug.push_back(sugar_of(g));
  }
  if (G.empty()) return G;
  const RingSpec& R = *G.front().ring();
  const bool rank_one = G.front().rank() == 1;

  std::vector<Pair> queue;
  // treated[i][j] (i<j): pair was reduced or eliminated; basis for the
  // classical chain elimination below.
  std::set<std::pair<std::uint32_t, std::uint32_t>> treated;
  auto mark = [&treated](std::uint32_t i, std::uint32_t j) {
    treated.insert({std::min(i, j), std::max(i, j)});
  };
  auto is_treated = [&treated](std::uint32_t i, std::uint32_t j) {
    return treated.count({std::min(i, j), std::max(i, j)}) != 0;
  };

  for (std::uint32_t j = 1; j < G.size(); ++j)
    for (std::uint32_t i = 0; i < j; ++i)
      if (G[i].lt().pos == G[j].lt().pos) queue.push_back(make_pair(i, j, G, sug, R));

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), pair_before);
    Pair pr = *best;
    queue.erase(best);

    // product criterion (ideals only: for modules with rank > 1 the analogous
    // statement fails, so it is gated on rank one)
    if (rank_one && mono_coprime(G[pr.i].lt().e, G[pr.j].lt().e)) {
      mark(pr.i, pr.j);
      continue;
    }
    // chain criterion, treated-pair form: skip (i,j) when some k has leading
    // position pos, lt(k) | lcm(i,j), and both (i,k), (k,j) already treated
    bool skip = false;
    for (std::uint32_t k = 0; k < G.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k].lt().pos != pr.pos || !mono_divides(G[k].lt().e, pr.lcm)) continue;
      if (is_treated(pr.i, k) && is_treated(k, pr.j)) {
        skip = true;
        break;
      }
    }
    if (skip) {
      mark(pr.i, pr.j);
      continue;
    }

    ModVec s = s_vector(G[pr.i], G[pr.j], pr.lcm, O);
    ModVec h = normal_form(s, G, O);
    mark(pr.i, pr.j);
    if (h.is_zero()) continue;

    const std::uint32_t n = static_cast<std::uint32_t>(G.size());
    G.push_back(h.monic());
    sug.push_back(std::max(pr.sugar, sugar_of(h)));
    for (std::uint32_t i = 0; i < n; ++i)
      if (G[i].lt().pos == G[n].lt().pos) queue.push_back(make_pair(i, n, G, sug, R));
  }
  return interreduce(std::move(G), O);
}

bool buchberger_criterion_holds(const std::vector<ModVec>& gb, const ModOrder& O) {
  for (std::size_t j = 0; j < gb.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (gb[i].lt().pos != gb[j].lt().pos) continue;
      Expo lcm = mono_lcm(gb[i].lt().e, gb[j].lt().e);
      ModVec s = s_vector(gb[i], gb[j], lcm, O);
      if (!normal_form(s, gb, O).is_zero()) return false;
    }
  return true;
}

bool in_span(const ModVec& v, const std::vector<ModVec>& gb, const ModOrder& O) {
  return normal_form(v, gb, O).is_zero();
}

std::vector<ModVec> schreyer_syzygies(const std::vector<ModVec>& gb,
                                      std::shared_ptr<const ModOrder> order,
                                      std::shared_ptr<const ModOrder>& syz_order) {
  std::vector<MTerm> leads;
  leads.reserve(gb.size());
  for (const auto& g : gb) leads.push_back(g.lt());
  syz_order = std::make_shared<const ModOrder>(ModOrder::schreyer(order, leads));
  const ModOrder& SO = *syz_order;
  const ModOrder& O = *order;

  std::vector<ModVec> out;
  if (gb.empty()) return out;
  const RingPtr& R = gb.front().ring();
  const std::uint32_t m = static_cast<std::uint32_t>(gb.size());

  for (std::uint32_t j = 1; j < m; ++j)
    for (std::uint32_t i = 0; i < j; ++i) {
      if (gb[i].lt().pos != gb[j].lt().pos) continue;
      Expo lcm = mono_lcm(gb[i].lt().e, gb[j].lt().e);
      ModVec s = s_vector(gb[i], gb[j], lcm, O);
      std::vector<GradedPoly> q;
      ModVec r = normal_form(s, gb, O, &q);
      if (!r.is_zero())
        throw std::logic_error("schreyer_syzygies: input is not a Groebner basis");
      // syzygy  (1/c_i) x^{lcm-lt_i} e_i - (1/c_j) x^{lcm-lt_j} e_j - sum q_k e_k
      std::vector<MTerm> terms;
      const std::uint32_t p = R->p;
      auto push_poly = [&terms](const GradedPoly& f, std::uint32_t pos) {
        for (const auto& t : f.terms()) terms.push_back({pos, t.e, t.c});
      };
      terms.push_back({i, mono_div(lcm, gb[i].lt().e), fp::inv(gb[i].lt().c, p)});
      terms.push_back({j, mono_div(lcm, gb[j].lt().e), fp::neg(fp::inv(gb[j].lt().c, p), p)});
      for (std::uint32_t k = 0; k < m; ++k)
        push_poly(-q[k], k);
      ModVec syz(R, m, terms, SO);
      if (!syz.is_zero()) out.push_back(syz);
    }
  std::sort(out.begin(), out.end(),
            [&SO](const ModVec& a, const ModVec& b) { return SO.cmp(a.lt(), b.lt()) > 0; });
  return out;
}

// ---- row-matrix layer ----

namespace {

std::vector<ModVec> rows_to_vectors(const RingPtr& R, const PolyMatrix& rows,
                                    std::uint32_t width, const ModOrder& O) {
  std::vector<ModVec> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != width) throw std::invalid_argument("row width mismatch");
    out.push_back(ModVec::from_row(R, row, O));
  }
  return out;
}

} // namespace

PolyMatrix syzygies_of(const RingPtr& R, const PolyMatrix& vectors, std::uint32_t width) {
  const std::uint32_t k = static_cast<std::uint32_t>(vectors.size());
  if (k == 0) return {};
  const std::uint32_t rank = width + k;
  ModOrder O = ModOrder::pot_head(*R, width);
  std::vector<ModVec> gens;
  gens.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (vectors[i].size() != width) throw std::invalid_argument("row width mismatch");
    ModVec v = ModVec::from_row(R, vectors[i], O);
    std::vector<MTerm> terms(v.terms());
    terms.push_back({width + i, Expo(R->vars.size(), 0), 1});
    gens.emplace_back(R, rank, terms, O);
  }
  std::vector<ModVec> gb = buchberger(gens, O);
  PolyMatrix out;
  for (const auto& g : gb) {
    bool head_zero = true;
    for (const auto& t : g.terms())
      if (t.pos < width) {
        head_zero = false;
        break;
      }
    if (!head_zero) continue;
    out.push_back(g.block(width, rank, O).to_row());
  }
  return out;
}

bool row_in_span(const RingPtr& R, const PolyRow& v, const PolyMatrix& vectors) {
  const std::uint32_t width = static_cast<std::uint32_t>(v.size());
  ModOrder O = ModOrder::top(*R);
  std::vector<ModVec> gb = buchberger(rows_to_vectors(R, vectors, width, O), O);
  return in_span(ModVec::from_row(R, v, O), gb, O);
}

PolyMatrix row_gb(const RingPtr& R, const PolyMatrix& vectors, std::uint32_t width) {
  ModOrder O = ModOrder::top(*R);
  std::vector<ModVec> gb = buchberger(rows_to_vectors(R, vectors, width, O), O);
  PolyMatrix out;
  out.reserve(gb.size());
  for (const auto& g : gb) out.push_back(g.to_row());
  return out;
}

bool rows_subset(const RingPtr& R, const PolyMatrix& sub, const PolyMatrix& super,
                 std::uint32_t width) {
  ModOrder O = ModOrder::top(*R);
  std::vector<ModVec> gb = buchberger(rows_to_vectors(R, super, width, O), O);
  for (const auto& row : sub)
    if (!in_span(ModVec::from_row(R, row, O), gb, O)) return false;
  return true;
}

bool rows_equal_span(const RingPtr& R, const PolyMatrix& a, const PolyMatrix& b,
                     std::uint32_t width) {
  return rows_subset(R, a, b, width) && rows_subset(R, b, a, width);
}

PolyMatrix colon_rows_by_poly(const RingPtr& R, const PolyMatrix& V, const GradedPoly& f,
                              std::uint32_t width) {
  if (f.is_zero()) throw std::invalid_argument("colon by zero");
  // syzygies of (f e_1, ..., f e_width, rows of V): the first block of each
  // syzygy is an element of (V : f)
  PolyMatrix stacked;
  for (std::uint32_t i = 0; i < width; ++i) {
    PolyRow row(width, GradedPoly::zero(R));
    row[i] = f;
    stacked.push_back(std::move(row));
  }
  for (const auto& row : V) stacked.push_back(row);
  PolyMatrix syz = syzygies_of(R, stacked, width);
  PolyMatrix out;
  for (const auto& s : syz) {
    PolyRow head(s.begin(), s.begin() + width);
    bool zero = std::all_of(head.begin(), head.end(),
                            [](const GradedPoly& g) { return g.is_zero(); });
    if (!zero) out.push_back(std::move(head));
  }
  return out;
}

PolyMatrix saturate_rows_by_poly(const RingPtr& R, const PolyMatrix& V, const GradedPoly& f,
                                 std::uint32_t width) {
  PolyMatrix cur = row_gb(R, V, width);
  for (;;) {
    PolyMatrix next = colon_rows_by_poly(R, cur, f, width);
    if (rows_subset(R, next, cur, width)) return cur;
    for (auto& row : cur) next.push_back(std::move(row));
    cur = row_gb(R, next, width);
  }
}

PolyMatrix saturate_rows_by_ideal(const RingPtr& R, const PolyMatrix& V,
                                  const std::vector<GradedPoly>& ideal, std::uint32_t width) {
  if (ideal.empty()) throw std::invalid_argument("saturation by the zero ideal");
  PolyMatrix acc;
  bool first = true;
  for (const auto& b : ideal) {
    PolyMatrix sat = saturate_rows_by_poly(R, V, b, width);
    acc = first ? std::move(sat) : intersect_rows(R, acc, sat, width);
    first = false;
  }
  return acc;
}

PolyMatrix intersect_rows(const RingPtr& R, const PolyMatrix& V, const PolyMatrix& W,
                          std::uint32_t width) {
  // syzygies of the stacked rows; a relation sum a_i v_i + sum b_j w_j = 0
  // exhibits sum a_i v_i = -(sum b_j w_j) in the intersection
  PolyMatrix stacked = V;
  for (const auto& row : W) stacked.push_back(row);
  PolyMatrix syz = syzygies_of(R, stacked, width);
  PolyMatrix out;
  for (const auto& s : syz) {
    PolyRow combo(width, GradedPoly::zero(R));
    for (std::size_t i = 0; i < V.size(); ++i)
      for (std::uint32_t c = 0; c < width; ++c) combo[c] += s[i] * V[i][c];
    bool zero = std::all_of(combo.begin(), combo.end(),
                            [](const GradedPoly& g) { return g.is_zero(); });
    if (!zero) out.push_back(std::move(combo));
  }
  return row_gb(R, out, width);
}

std::vector<GradedPoly> colon_rows_into_ideal(const RingPtr& R, const PolyMatrix& V,
                                              const PolyRow& u, std::uint32_t width) {
  // syzygies of (u, rows of V): first coordinates generate { a : a u in <V> }
  PolyMatrix stacked;
  stacked.push_back(u);
  for (const auto& row : V) stacked.push_back(row);
  PolyMatrix syz = syzygies_of(R, stacked, width);
  std::vector<GradedPoly> out;
  for (const auto& s : syz)
    if (!s[0].is_zero()) out.push_back(s[0]);
  return groebner_basis(out.empty() ? std::vector<GradedPoly>{} : out);
}

// ---- ideal wrappers ----

namespace {

std::vector<ModVec> ideal_to_vectors(const std::vector<GradedPoly>& gens, const ModOrder& O) {
  std::vector<ModVec> out;
  for (const auto& f : gens)
    if (!f.is_zero()) out.push_back(ModVec::from_row(f.ring(), {f}, O));
  return out;
}

} // namespace

std::vector<GradedPoly> groebner_basis(const std::vector<GradedPoly>& gens) {
  std::vector<GradedPoly> out;
  if (gens.empty()) return out;
  const RingPtr& R = gens.front().ring();
  ModOrder O = ModOrder::top(*R);
  for (const auto& gb : buchberger(ideal_to_vectors(gens, O), O))
    out.push_back(gb.component(0));
  return out;
}

GradedPoly normal_form(const GradedPoly& f, const std::vector<GradedPoly>& basis) {
  const RingPtr& R = f.ring();
  ModOrder O = ModOrder::top(*R);
  ModVec r = normal_form(ModVec::from_row(R, {f}, O), ideal_to_vectors(basis, O), O);
  return r.component(0);
}

bool ideal_member(const GradedPoly& f, const std::vector<GradedPoly>& gb) {
  return normal_form(f, gb).is_zero();
}

std::vector<GradedPoly> ideal_intersect(const RingPtr& R, const std::vector<GradedPoly>& I,
                                        const std::vector<GradedPoly>& J) {
  PolyMatrix V, W;
  for (const auto& f : I) V.push_back({f});
  for (const auto& f : J) W.push_back({f});
  PolyMatrix X = intersect_rows(R, V, W, 1);
  std::vector<GradedPoly> out;
  for (const auto& row : X)
    if (!row[0].is_zero()) out.push_back(row[0]);
  return groebner_basis(out.empty() ? std::vector<GradedPoly>{} : out);
}

bool ideal_equal(const RingPtr& R, const std::vector<GradedPoly>& I,
                 const std::vector<GradedPoly>& J) {
  PolyMatrix V, W;
  for (const auto& f : I) V.push_back({f});
  for (const auto& f : J) W.push_back({f});
  return rows_equal_span(R, V, W, 1);
}

std::vector<GradedPoly> ideal_quotient(const RingPtr& R, const std::vector<GradedPoly>& I,
                                       const GradedPoly& f) {
  PolyMatrix V;
  for (const auto& g : I) V.push_back({g});
  PolyMatrix Q = colon_rows_by_poly(R, V, f, 1);
  std::vector<GradedPoly> out;
  for (const auto& row : Q)
    if (!row[0].is_zero()) out.push_back(row[0]);
  return groebner_basis(out.empty() ? std::vector<GradedPoly>{} : out);
}

} // namespace iwa
