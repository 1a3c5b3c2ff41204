#include <algorithm>
#include <stdexcept>

#include "iwa/factor.hpp"

namespace iwa {

namespace {

using uni::UPoly;

// ---- truncated power series in the shifted variable Z, cap K ----

UPoly ts_trunc(UPoly a, std::size_t K) {
  if (a.size() > K) a.resize(K);
  return uni::trim(std::move(a));
}

UPoly ts_mul(const UPoly& a, const UPoly& b, std::size_t K, std::uint32_t p) {
  return ts_trunc(uni::mul(a, b, p), K);
}

UPoly ts_inv(const UPoly& a, std::size_t K, std::uint32_t p) {
  if (a.empty() || a[0] == 0) throw std::domain_error("ts_inv: non-unit series");
  UPoly b(K, 0);
  const std::uint32_t i0 = fp::inv(a[0], p);
  b[0] = i0;
  for (std::size_t n = 1; n < K; ++n) {
    std::uint32_t acc = 0;
    for (std::size_t i = 1; i <= n && i < a.size(); ++i)
      acc = fp::add(acc, fp::mul(a[i], b[n - i], p), p);
    b[n] = fp::mul(fp::neg(acc, p), i0, p);
  }
  return uni::trim(std::move(b));
}

// ---- polynomials in the main variable with truncated series coefficients ----

using HPoly = std::vector<UPoly>; // index = main-variable degree

HPoly h_trim(HPoly f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
  return f;
}
int h_deg(const HPoly& f) { return static_cast<int>(f.size()) - 1; }

HPoly h_add(const HPoly& a, const HPoly& b, std::uint32_t p) {
  HPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = uni::add(i < a.size() ? a[i] : UPoly{}, i < b.size() ? b[i] : UPoly{}, p);
  return h_trim(std::move(r));
}

HPoly h_sub(const HPoly& a, const HPoly& b, std::uint32_t p) {
  HPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = uni::sub(i < a.size() ? a[i] : UPoly{}, i < b.size() ? b[i] : UPoly{}, p);
  return h_trim(std::move(r));
}

HPoly h_mul(const HPoly& a, const HPoly& b, std::size_t K, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  HPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = uni::add(r[i + j], ts_mul(a[i], b[j], K, p), p);
  }
  return h_trim(std::move(r));
}

// division with remainder by a monic (leading series coefficient == {1}) poly
std::pair<HPoly, HPoly> h_divrem(const HPoly& a, const HPoly& b, std::size_t K,
                                 std::uint32_t p) {
  if (b.empty() || b.back() != UPoly{1}) throw std::logic_error("h_divrem: divisor not monic");
  HPoly r = a;
  if (a.size() < b.size()) return {{}, h_trim(std::move(r))};
  HPoly q(a.size() - b.size() + 1);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (i < r.size() && !r[i].empty()) {
      UPoly c = r[i];
      q[i - b.size() + 1] = c;
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i - b.size() + 1 + j] =
            uni::sub(r[i - b.size() + 1 + j], ts_mul(c, b[j], K, p), p);
    }
    if (i == 0) break;
  }
  return {h_trim(std::move(q)), h_trim(std::move(r))};
}

HPoly h_monic(const HPoly& a, std::size_t K, std::uint32_t p) {
  if (a.empty()) throw std::domain_error("h_monic of zero");
  UPoly linv = ts_inv(a.back(), K, p);
  HPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ts_mul(a[i], linv, K, p);
  return r;
}

HPoly h_truncate(const HPoly& a, std::size_t K) {
  HPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ts_trunc(a[i], K);
  return h_trim(std::move(r));
}

HPoly h_embed(const UPoly& u) {
  HPoly r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i]) r[i] = UPoly{u[i]};
  return h_trim(std::move(r));
}

// extended Euclid over F_p[x]: s*a + t*b = g (monic)
void uegcd(const UPoly& a, const UPoly& b, std::uint32_t p, UPoly& g, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r2] = uni::divrem(r0, r1, p);
    UPoly s2 = uni::sub(s0, uni::mul(q, s1, p), p);
    UPoly t2 = uni::sub(t0, uni::mul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.empty()) throw std::domain_error("uegcd of zeros");
  std::uint32_t c = fp::inv(r0.back(), p);
  g = uni::scale(r0, c, p);
  s = uni::scale(s0, c, p);
  t = uni::scale(t0, c, p);
}

// quadratic Hensel lift of the coprime split f = g0 * h0 at Z = 0 up to Z^K;
// f monic in the main variable, both outputs monic
void lift_pair(const HPoly& f, const UPoly& g0, const UPoly& h0, std::size_t K,
               std::uint32_t p, HPoly& G, HPoly& H) {
  UPoly one_, s0, t0;
  uegcd(g0, h0, p, one_, s0, t0);
  if (one_ != UPoly{1}) throw std::logic_error("lift_pair: factors not coprime");
  HPoly g = h_embed(g0), h = h_embed(h0), s = h_embed(s0), t = h_embed(t0);
  std::size_t k = 1;
  while (k < K) {
    std::size_t k2 = std::min(2 * k, K);
    HPoly fk = h_truncate(f, k2);
    HPoly e = h_sub(fk, h_mul(g, h, k2, p), p);
    auto [q, r] = h_divrem(h_mul(s, e, k2, p), h, k2, p);
    g = h_add(g, h_add(h_mul(t, e, k2, p), h_mul(q, g, k2, p), p), p);
    h = h_add(h, r, p);
    HPoly b = h_sub(h_add(h_mul(s, g, k2, p), h_mul(t, h, k2, p), p), h_embed({1}), p);
    auto [c, d] = h_divrem(h_mul(s, b, k2, p), h, k2, p);
    s = h_sub(s, d, p);
    t = h_sub(t, h_add(h_mul(t, b, k2, p), h_mul(c, g, k2, p), p), p);
    k = k2;
    if (h_deg(g) != uni::deg(g0) || h_deg(h) != uni::deg(h0))
      throw std::logic_error("lift_pair: degree drift");
  }
  if (g.back() != UPoly{1}) g = h_monic(g, K, p);
  if (h.back() != UPoly{1}) throw std::logic_error("lift_pair: cofactor lost monicity");
  G = std::move(g);
  H = std::move(h);
}

// lift the full squarefree factorization of f(., 0) = prod u_i up to Z^K
std::vector<HPoly> lift_tree(const HPoly& f, const std::vector<UPoly>& u, std::size_t K,
                             std::uint32_t p) {
  if (u.size() == 1) return {f};
  std::size_t m = u.size() / 2;
  UPoly g0 = {1}, h0 = {1};
  for (std::size_t i = 0; i < m; ++i) g0 = uni::mul(g0, u[i], p);
  for (std::size_t i = m; i < u.size(); ++i) h0 = uni::mul(h0, u[i], p);
  HPoly G, H;
  lift_pair(f, g0, h0, K, p, G, H);
  std::vector<HPoly> out =
      lift_tree(G, std::vector<UPoly>(u.begin(), u.begin() + m), K, p);
  std::vector<HPoly> right =
      lift_tree(H, std::vector<UPoly>(u.begin() + m, u.end()), K, p);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

// ---- dense bivariate helpers on GradedPoly (exactly two variables) ----

// main-variable-major dense form: bp[i] = coefficient of main^i as a
// polynomial in the other variable
using BPoly = std::vector<UPoly>;

BPoly to_bp(const GradedPoly& f, std::size_t mv) {
  const std::size_t ov = 1 - mv;
  BPoly r;
  for (const auto& t : f.terms()) {
    std::size_t i = t.e[mv], j = t.e[ov];
    if (r.size() <= i) r.resize(i + 1);
    if (r[i].size() <= j) r[i].resize(j + 1, 0);
    r[i][j] = t.c;
  }
  for (auto& u : r) u = uni::trim(std::move(u));
  return h_trim(std::move(r));
}

GradedPoly from_bp(const RingPtr& R, const BPoly& b, std::size_t mv) {
  const std::size_t ov = 1 - mv;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j)
      if (b[i][j]) {
        Expo e(2, 0);
        e[mv] = static_cast<std::uint32_t>(i);
        e[ov] = static_cast<std::uint32_t>(j);
        terms.push_back({std::move(e), b[i][j]});
      }
  return GradedPoly(R, std::move(terms));
}

UPoly bp_content(const BPoly& f, std::uint32_t p) {
  UPoly g;
  for (const auto& u : f) g = uni::gcd(g, u, p);
  return g;
}

BPoly bp_div_content(const BPoly& f, const UPoly& c, std::uint32_t p) {
  BPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].empty()) continue;
    auto q = uni::divide_exact(f[i], c, p);
    if (!q) throw std::logic_error("bp_div_content: inexact");
    r[i] = *q;
  }
  return r;
}

// pseudo-remainder in the main variable
BPoly bp_prem(BPoly F, const BPoly& G, std::uint32_t p) {
  F = h_trim(std::move(F));
  if (G.empty()) throw std::domain_error("bp_prem by zero");
  while (h_deg(F) >= h_deg(G) && !F.empty()) {
    const UPoly lcF = F.back();
    const UPoly& lcG = G.back();
    const std::size_t d = F.size() - G.size();
    BPoly nf(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) nf[i] = uni::mul(F[i], lcG, p);
    for (std::size_t j = 0; j < G.size(); ++j)
      nf[j + d] = uni::sub(nf[j + d], uni::mul(lcF, G[j], p), p);
    nf.pop_back(); // leading term cancels by construction
    F = h_trim(std::move(nf));
  }
  return F;
}

// gcd of primitive parts via the primitive PRS
BPoly bp_gcd_pp(BPoly F, BPoly G, std::uint32_t p) {
  F = bp_div_content(F, bp_content(F, p), p);
  G = bp_div_content(G, bp_content(G, p), p);
  if (h_deg(F) < h_deg(G)) std::swap(F, G);
  for (;;) {
    BPoly R = bp_prem(F, G, p);
    if (R.empty()) return G;
    F = std::move(G);
    G = bp_div_content(R, bp_content(R, p), p);
  }
}

GradedPoly monic_normalize(const GradedPoly& f) { return f.is_zero() ? f : f.monic(); }

GradedPoly derivative(const GradedPoly& f, std::size_t var) {
  const RingPtr& R = f.ring();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.e[var] == 0) continue;
    std::uint32_t c = fp::mul(t.c, t.e[var] % R->p, R->p);
    if (!c) continue;
    Expo e = t.e;
    e[var] -= 1;
    terms.push_back({std::move(e), c});
  }
  return GradedPoly(R, std::move(terms));
}

GradedPoly pth_root_graded(const GradedPoly& f) {
  const RingPtr& R = f.ring();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Expo e = t.e;
    for (auto& x : e) {
      if (x % R->p) throw std::logic_error("pth_root_graded: exponent not divisible");
      x /= R->p;
    }
    terms.push_back({std::move(e), t.c});
  }
  return GradedPoly(R, std::move(terms));
}

// Pascal triangle mod p up to row maxd
std::vector<std::vector<std::uint32_t>> pascal_rows(std::uint32_t maxd, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> binom(maxd + 1);
  for (std::uint32_t n = 0; n <= maxd; ++n) {
    binom[n].assign(n + 1, 1);
    for (std::uint32_t k = 1; k < n; ++k)
      binom[n][k] = fp::add(binom[n - 1][k - 1], binom[n - 1][k], p);
  }
  return binom;
}

// substitute var -> var + c (binomial expansion; Pascal row mod p)
GradedPoly shift_var(const GradedPoly& f, std::size_t var, std::uint32_t c) {
  const RingPtr& R = f.ring();
  const std::uint32_t p = R->p;
  if (c % p == 0) return f;
  auto binom = pascal_rows(f.degree_in(var), p);
  GradedPoly out = GradedPoly::zero(R);
  for (const auto& t : f.terms()) {
    const std::uint32_t b = t.e[var];
    std::uint32_t cpow = 1;
    // k runs over the new exponent of var: coeff * C(b,k) * c^{b-k}
    for (std::uint32_t k = b + 1; k-- > 0;) {
      std::uint32_t co = fp::mul(t.c, fp::mul(binom[b][k], cpow, p), p);
      Expo e = t.e;
      e[var] = k;
      out += GradedPoly::monomial(R, std::move(e), co);
      cpow = fp::mul(cpow, c % p, p);
    }
  }
  return out;
}

// substitute var -> var + c * other: a ring automorphism (inverse uses -c);
// used when no evaluation point in F_p separates the lifted factors
GradedPoly shear(const GradedPoly& f, std::size_t var, std::uint32_t c) {
  const RingPtr& R = f.ring();
  const std::uint32_t p = R->p;
  const std::size_t ov = 1 - var;
  auto binom = pascal_rows(f.degree_in(var), p);
  GradedPoly out = GradedPoly::zero(R);
  for (const auto& t : f.terms()) {
    const std::uint32_t b = t.e[var];
    std::uint32_t cpow = 1;
    for (std::uint32_t k = b + 1; k-- > 0;) {
      std::uint32_t co = fp::mul(t.c, fp::mul(binom[b][k], cpow, p), p);
      Expo e = t.e;
      e[var] = k;
      e[ov] += b - k;
      out += GradedPoly::monomial(R, std::move(e), co);
      cpow = fp::mul(cpow, c % p, p);
    }
  }
  return out;
}

// distinct irreducible factors of a squarefree primitive two-variable
// polynomial with positive degree in variable mv, by lifting along a point
// where the specialization stays squarefree; nullopt if no point works
std::optional<std::vector<GradedPoly>> hensel_distinct(const GradedPoly& f, std::size_t mv) {
  const RingPtr& R = f.ring();
  const std::uint32_t p = R->p;
  const std::size_t ov = 1 - mv;
  BPoly bp = to_bp(f, mv);

  std::optional<std::uint32_t> point;
  for (std::uint32_t y0 = 0; y0 < p; ++y0) {
    if (uni::eval(bp.back(), y0, p) == 0) continue;
    UPoly u(bp.size());
    for (std::size_t i = 0; i < bp.size(); ++i) u[i] = uni::eval(bp[i], y0, p);
    if (uni::is_squarefree(uni::trim(std::move(u)), p)) {
      point = y0;
      break;
    }
  }
  if (!point) return std::nullopt;
  const std::uint32_t y0 = *point;

  GradedPoly fsh = shift_var(f, ov, y0); // evaluation point moves to 0
  BPoly bsh = to_bp(fsh, mv);
  UPoly u(bsh.size());
  for (std::size_t i = 0; i < bsh.size(); ++i) u[i] = bsh[i].empty() ? 0 : bsh[i][0];
  u = uni::trim(std::move(u));

  uni::UniFactors uf = uni::factor(u, p);
  std::vector<UPoly> parts;
  for (const auto& [g, m] : uf.factors) {
    if (m != 1) throw std::logic_error("hensel_distinct: specialization not squarefree");
    parts.push_back(g);
  }
  if (parts.size() == 1) return std::vector<GradedPoly>{monic_normalize(f)};

  std::size_t degy = 0, degylc = 0;
  for (const auto& c : bsh) degy = std::max(degy, c.size());
  degylc = bsh.back().size();
  const std::size_t K = degy + degylc + 1;

  HPoly fH(bsh.size());
  for (std::size_t i = 0; i < bsh.size(); ++i) fH[i] = ts_trunc(bsh[i], K);
  fH = h_monic(fH, K, p);
  std::vector<HPoly> lifted = lift_tree(fH, parts, K, p);

  // Zassenhaus recombination against the shifted remaining cofactor
  std::vector<GradedPoly> found;
  GradedPoly rem = fsh;
  std::vector<HPoly> active = std::move(lifted);
  std::size_t s = 1;
  while (!active.empty()) {
    if (2 * s > active.size()) {
      found.push_back(monic_normalize(rem));
      active.clear();
      break;
    }
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      BPoly brem = to_bp(rem, mv);
      HPoly cand(1, ts_trunc(brem.back(), K)); // leading coefficient of rem
      for (std::size_t i : idx) cand = h_mul(cand, active[i], K, p);
      BPoly cb(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) cb[i] = cand[i];
      UPoly ct = bp_content(cb, p);
      GradedPoly g = from_bp(R, bp_div_content(cb, ct, p), mv);
      auto q = GradedPoly::divide_exact(rem, g);
      if (q) {
        found.push_back(monic_normalize(g));
        rem = *q;
        std::vector<HPoly> next;
        for (std::size_t i = 0; i < active.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end())
            next.push_back(std::move(active[i]));
        active = std::move(next);
        hit = true;
        break;
      }
      // next subset of size s
      std::size_t i = s;
      while (i-- > 0) {
        if (idx[i] + (s - i) < active.size()) {
          ++idx[i];
          for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
    if (!hit) ++s;
  }
  // undo the shift
  std::vector<GradedPoly> out;
  for (const auto& g : found) {
    GradedPoly back = shift_var(g, ov, fp::neg(y0 % p, p));
    if (!back.is_constant()) out.push_back(monic_normalize(back));
  }
  return out;
}

void merge_distinct(std::vector<GradedPoly>& acc, const std::vector<GradedPoly>& more) {
  for (const auto& g : more) {
    bool dup = false;
    for (const auto& h : acc) dup = dup || h == g;
    if (!dup) acc.push_back(g);
  }
}

// univariate factorization of a GradedPoly supported on one variable
std::vector<GradedPoly> univar_distinct(const GradedPoly& f, std::size_t var) {
  const RingPtr& R = f.ring();
  UPoly u;
  for (const auto& t : f.terms()) {
    if (u.size() <= t.e[var]) u.resize(t.e[var] + 1, 0);
    u[t.e[var]] = t.c;
  }
  uni::UniFactors uf = uni::factor(uni::trim(std::move(u)), R->p);
  std::vector<GradedPoly> out;
  for (const auto& [g, m] : uf.factors) {
    GradedPoly h = GradedPoly::zero(R);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g[i]) continue;
      Expo e(R->nvars(), 0);
      e[var] = static_cast<std::uint32_t>(i);
      h += GradedPoly::monomial(R, std::move(e), g[i]);
    }
    out.push_back(monic_normalize(h));
  }
  return out;
}

struct DistinctResult {
  std::vector<GradedPoly> factors;
  std::optional<GradedPoly> residual;
};

void distinct_of(const GradedPoly& f, DistinctResult& out);

// f squarefree and non-constant here
void distinct_of_squarefree(const GradedPoly& f, DistinctResult& out, int shear_budget) {
  const RingPtr& R = f.ring();
  const std::uint32_t p = R->p;
  if (f.degree_in(0) == 0) {
    merge_distinct(out.factors, univar_distinct(f, 1));
    return;
  }
  if (f.degree_in(1) == 0) {
    merge_distinct(out.factors, univar_distinct(f, 0));
    return;
  }
  // peel the content in both directions so every remaining factor has
  // positive degree in each variable (the lift cannot see content factors)
  for (std::size_t mv : {std::size_t{0}, std::size_t{1}}) {
    UPoly c = bp_content(to_bp(f, mv), p);
    if (uni::deg(c) == 0) continue;
    const std::size_t ov = 1 - mv;
    GradedPoly cf = GradedPoly::zero(R);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i]) continue;
      Expo e(2, 0);
      e[ov] = static_cast<std::uint32_t>(i);
      cf += GradedPoly::monomial(R, std::move(e), c[i]);
    }
    merge_distinct(out.factors, univar_distinct(cf, ov));
    distinct_of_squarefree(*GradedPoly::divide_exact(f, cf), out, shear_budget);
    return;
  }
  auto lifted = hensel_distinct(f, 0);
  if (!lifted) lifted = hensel_distinct(f, 1);
  if (lifted) {
    merge_distinct(out.factors, *lifted);
    return;
  }
  if (shear_budget > 0) {
    for (std::uint32_t c = 1; c < p; ++c) {
      for (std::size_t sv : {std::size_t{0}, std::size_t{1}}) {
        DistinctResult tmp;
        distinct_of_squarefree(shear(f, sv, c), tmp, shear_budget - 1);
        if (tmp.residual) continue;
        for (const auto& g : tmp.factors) {
          GradedPoly back = shear(g, sv, fp::neg(c % p, p));
          if (!back.is_constant())
            merge_distinct(out.factors, {monic_normalize(back)});
        }
        return;
      }
    }
  }
  // no separating point in any tried coordinate system: report honestly
  if (out.residual)
    *out.residual *= f;
  else
    out.residual = f;
}

void distinct_of(const GradedPoly& f, DistinctResult& out) {
  if (f.is_constant()) return;
  const RingPtr& R = f.ring();
  GradedPoly fx = derivative(f, 0);
  GradedPoly fy = R->nvars() == 2 ? derivative(f, 1) : GradedPoly::zero(R);
  if (fx.is_zero() && fy.is_zero()) {
    distinct_of(pth_root_graded(f), out);
    return;
  }
  GradedPoly g = poly_gcd(f, fx.is_zero() ? fy : fx);
  if (g.is_constant()) {
    distinct_of_squarefree(f, out, 4);
    return;
  }
  distinct_of(*GradedPoly::divide_exact(f, g), out);
  distinct_of(g, out);
}

} // namespace

GradedPoly poly_gcd(const GradedPoly& a, const GradedPoly& b) {
  if (a.is_zero()) return monic_normalize(b);
  if (b.is_zero()) return monic_normalize(a);
  a.check_ring(b);
  const RingPtr& R = a.ring();
  const std::uint32_t p = R->p;
  if (R->nvars() == 1) {
    UPoly ua, ub;
    for (const auto& t : a.terms()) {
      if (ua.size() <= t.e[0]) ua.resize(t.e[0] + 1, 0);
      ua[t.e[0]] = t.c;
    }
    for (const auto& t : b.terms()) {
      if (ub.size() <= t.e[0]) ub.resize(t.e[0] + 1, 0);
      ub[t.e[0]] = t.c;
    }
    UPoly g = uni::gcd(ua, ub, p);
    GradedPoly out = GradedPoly::zero(R);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i]) out += GradedPoly::monomial(R, Expo{static_cast<std::uint32_t>(i)}, g[i]);
    return out;
  }
  if (R->nvars() != 2) throw std::invalid_argument("poly_gcd: supports one or two variables");
  BPoly A = to_bp(a, 0), B = to_bp(b, 0);
  UPoly ca = bp_content(A, p), cb = bp_content(B, p);
  UPoly c = uni::gcd(ca, cb, p);
  BPoly G = bp_gcd_pp(A, B, p);
  BPoly full(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) full[i] = uni::mul(G[i], c, p);
  return monic_normalize(from_bp(R, full, 0));
}

FactorResult factor(const GradedPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor of zero");
  const RingPtr& R = f.ring();
  if (R->nvars() > 2) throw std::invalid_argument("factor: supports one or two variables");
  FactorResult res;
  if (f.is_constant()) {
    res.unit = f.lc();
    return res;
  }
  DistinctResult dr;
  if (R->nvars() == 1) {
    merge_distinct(dr.factors, univar_distinct(f, 0));
  } else {
    distinct_of(f, dr);
  }
  std::sort(dr.factors.begin(), dr.factors.end());
  GradedPoly rest = f;
  for (const auto& g : dr.factors) {
    std::uint32_t m = 0;
    for (;;) {
      auto q = GradedPoly::divide_exact(rest, g);
      if (!q) break;
      rest = *q;
      ++m;
    }
    if (m == 0) throw std::logic_error("factor: found divisor does not divide");
    res.factors.push_back({g, m});
  }
  if (rest.is_constant()) {
    res.unit = rest.lc();
  } else {
    res.unit = rest.lc();
    res.residual = monic_normalize(rest);
  }
  return res;
}

bool is_irreducible(const GradedPoly& f) {
  if (f.is_zero() || f.is_constant()) return false;
  FactorResult r = factor(f);
  if (r.residual)
    throw std::runtime_error("is_irreducible: no separating evaluation point, cannot certify");
  return r.factors.size() == 1 && r.factors[0].second == 1;
}

} // namespace iwa
