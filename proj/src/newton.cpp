// Newton polygons of monic polynomials over Z_p and factorization along the
// polygon.  Splits are computed by Newton iteration on the coefficient
// system of Q = G*H (G, H monic) with a valuation-pivoted exact linear
// solve mod p^a; slope classes are normalized to slope zero by p-power
// rescaling and then separated by their factorization mod p.
#include "iwa/factor.hpp"
#include "iwa/padic.hpp"

#include <algorithm>
#include <tuple>

namespace iwa {

namespace {

using Vec = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::int64_t igcd(std::int64_t a, std::int64_t b) {
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

struct Pt {
  std::int64_t x, y;
};

std::int64_t cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// hull value at integer x, compared against bound: hull(x) <= bound?
bool hull_at_most(const std::vector<Pt>& hull, std::int64_t x, std::int64_t bound) {
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    if (x < hull[s].x || x > hull[s + 1].x) continue;
    // v1 + (x-x1)(v2-v1)/(x2-x1) <= bound, cross-multiplied
    std::int64_t dx = hull[s + 1].x - hull[s].x;
    std::int64_t lhs = hull[s].y * dx + (x - hull[s].x) * (hull[s + 1].y - hull[s].y);
    if (lhs > bound * dx) return false;
    return true;
  }
  return true;
}

// Exact solve of A x = b mod p^a with full valuation pivoting.  Returns
// nullopt when the matrix is singular at this precision, when a
// back-substitution division fails, or when the accumulated pivot
// valuations eat the whole precision.  On success the second member is the
// largest pivot valuation; with minimal-valuation full pivoting the residual
// block after each step is the same one the Smith elimination would produce,
// so the pivot valuations are the invariant factors of A and the solution is
// pinned down only modulo p^(a - maxpiv).
std::optional<std::pair<Vec, std::uint32_t>> gauss_solve_mod(std::uint32_t p, std::uint32_t a,
                                                             std::vector<Vec> A, Vec b) {
  const std::size_t n = b.size();
  const std::uint64_t m = padic_modulus(p, a);
  std::vector<std::size_t> colv(n);
  for (std::size_t j = 0; j < n; ++j) colv[j] = j;
  std::vector<std::uint32_t> pivval(n, 0);
  std::uint32_t loss = 0;

  for (std::size_t k = 0; k < n; ++k) {
    std::uint32_t best = a;
    std::size_t bi = k, bj = k;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        std::uint32_t v = padic_val(A[i][j], p, a);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best >= a) return std::nullopt;
    std::swap(A[k], A[bi]);
    std::swap(b[k], b[bi]);
    if (bj != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(A[i][k], A[i][bj]);
      std::swap(colv[k], colv[bj]);
    }
    pivval[k] = best;
    loss += best;
    if (loss >= a) return std::nullopt;

    std::uint64_t pk = padic_modulus(p, best == 0 ? 1 : best);
    if (best == 0) pk = 1;
    std::uint64_t unit = A[k][k] / pk;
    std::uint64_t uinv = padic_inv(unit, p, a);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (A[i][k] == 0) continue;
      // entries in the pivot column are divisible by p^best by minimality
      std::uint64_t w = A[i][k] / pk;
      std::uint64_t f = mulmod(w, uinv, m);
      for (std::size_t j = k; j < n; ++j) A[i][j] = (A[i][j] + m - mulmod(f, A[k][j], m)) % m;
      b[i] = (b[i] + m - mulmod(f, b[k], m)) % m;
    }
  }

  Vec x(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    std::uint64_t acc = b[k] % m;
    for (std::size_t j = k + 1; j < n; ++j) acc = (acc + m - mulmod(A[k][j], x[j], m)) % m;
    std::uint64_t pk = pivval[k] == 0 ? 1 : padic_modulus(p, pivval[k]);
    if (acc % pk != 0) return std::nullopt;
    std::uint64_t unit = A[k][k] / pk;
    x[k] = mulmod(acc / pk, padic_inv(unit, p, a), m);
    if (k == 0) break;
  }
  Vec out(n, 0);
  for (std::size_t k = 0; k < n; ++k) out[colv[k]] = x[k];
  std::uint32_t maxpiv = 0;
  for (std::size_t k = 0; k < n; ++k) maxpiv = std::max(maxpiv, pivval[k]);
  return std::make_pair(std::move(out), maxpiv);
}

// Newton iteration for Q = G*H from an initial monic pair, with strict
// progress measured in the sigma-weighted valuation.  Returns the converged
// pair or nullopt on stall.  The third member is the precision lost to the
// split: G*H = Q holds modulo p^a, but the pair itself is unique only
// modulo p^(a - loss), so the pieces must be consumed at that precision.
struct NewtonSplit {
  Vec G, H;
  std::uint32_t loss;
};
std::optional<NewtonSplit> newton_pair(std::uint32_t p, std::uint32_t a, const Vec& Q, Vec G,
                                       Vec H, std::int64_t snum, std::int64_t sden) {
  const std::uint64_t m = padic_modulus(p, a);
  const std::size_t n = Q.size() - 1;
  const std::size_t dg = G.size() - 1, dh = H.size() - 1;
  if (dg + dh != n || G.back() % m != 1 || H.back() % m != 1)
    throw std::logic_error("newton_pair: inconsistent initial pair");

  std::int64_t prev = -1;
  std::uint32_t loss = 0;
  for (std::uint32_t iter = 0; iter < 600; ++iter) {
    Vec prod = pp::mul(G, H, p, a);
    prod.resize(n + 1, 0);
    Vec E(n + 1, 0);
    bool nonzero = false;
    for (std::size_t i = 0; i <= n; ++i) {
      E[i] = (Q[i] % m + m - prod[i]) % m;
      if (E[i] != 0) nonzero = true;
    }
    if (!nonzero) return NewtonSplit{std::move(G), std::move(H), loss};
    if (E[n] != 0) throw std::logic_error("newton_pair: leading coefficient drift");

    std::int64_t nu = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (E[i] == 0) continue;
      std::int64_t w = sden * static_cast<std::int64_t>(padic_val(E[i], p, a)) +
                       snum * static_cast<std::int64_t>(i);
      if (nu < 0 || w < nu) nu = w;
    }
    if (nu <= prev) return std::nullopt; // stalled
    prev = nu;

    // unknowns: dG (deg < dg), dH (deg < dh); equations: coeffs 0..n-1 of
    // dG*H + G*dH = E
    std::vector<Vec> Amat(n, Vec(n, 0));
    Vec rhs(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      rhs[k] = E[k];
      for (std::size_t j = 0; j < dg; ++j)
        if (k >= j && k - j <= dh) Amat[k][j] = H[k - j] % m;
      for (std::size_t j = 0; j < dh; ++j)
        if (k >= j && k - j <= dg) Amat[k][dg + j] = G[k - j] % m;
    }
    auto sol = gauss_solve_mod(p, a, Amat, rhs);
    if (!sol) return std::nullopt;
    loss = sol->second; // invariant factors of the (near-final) jacobian
    for (std::size_t j = 0; j < dg; ++j) G[j] = (G[j] + sol->first[j]) % m;
    for (std::size_t j = 0; j < dh; ++j) H[j] = (H[j] + sol->first[dg + j]) % m;
  }
  return std::nullopt;
}

struct Piece {
  Vec poly;
  std::int64_t num = 0, den = 1;
  std::uint32_t aprec = 0;
  std::uint32_t mult = 1;
  bool certified = false;
};

void split_all(std::uint32_t p, std::uint32_t a, const Vec& S, std::uint32_t mult,
               std::vector<Piece>& out);

// Recurse into the two halves of a newton split at the precision the split
// actually certifies; digits above it differ between valid representatives
// of the pair and must not be read as structure.
void split_newton_pieces(std::uint32_t p, std::uint32_t a, NewtonSplit sp, std::uint32_t mult,
                         std::vector<Piece>& out) {
  if (sp.loss + 1 >= a)
    throw PrecisionError("slope_factorization: split leaves no certified digits");
  std::uint32_t a2 = a - sp.loss;
  std::uint64_t m2 = padic_modulus(p, a2);
  for (auto& x : sp.G) x %= m2;
  for (auto& x : sp.H) x %= m2;
  split_all(p, a2, sp.G, mult, out);
  split_all(p, a2, sp.H, mult, out);
}

// Try to write monic Q as G^r for monic G, solving top coefficients down.
// Each step divides once by r, so r = p costs one digit per coefficient.
// Returns the root together with the precision at which G^r = Q was checked.
std::optional<std::pair<Vec, std::uint32_t>> try_kth_root(std::uint32_t p, std::uint32_t a,
                                                          const Vec& Q, std::uint32_t r) {
  const std::size_t n = Q.size() - 1;
  if (r < 2 || n % r != 0) return std::nullopt;
  const std::size_t d = n / r;
  const std::uint32_t vr = (r % p == 0) ? 1 : 0;
  if (a <= vr * static_cast<std::uint32_t>(d) + 1) return std::nullopt;
  const std::uint64_t m = padic_modulus(p, a);
  const std::uint64_t pk = vr == 0 ? 1 : p;
  const std::uint64_t runit_inv = padic_inv((r / pk) % m, p, a);

  Vec G(d + 1, 0);
  G[d] = 1;
  auto power = [&]() {
    Vec pw = {1};
    for (std::uint32_t t = 0; t < r; ++t) pw = pp::mul(pw, G, p, a);
    pw.resize(n + 1, 0);
    return pw;
  };
  for (std::size_t j = d; j-- > 0;) {
    // coefficient of T^{(r-1)d + j} in (partial G)^r is r*G[j] plus terms in
    // the already-known coefficients above j
    Vec pw = power();
    std::size_t idx = (r - 1) * d + j;
    std::uint64_t num = (Q[idx] % m + m - pw[idx]) % m;
    if (num % pk != 0) return std::nullopt;
    G[j] = mulmod((num / pk) % m, runit_inv, m);
  }
  std::uint32_t aver = a - vr * static_cast<std::uint32_t>(d);
  std::uint64_t mv = padic_modulus(p, aver);
  Vec pw = power();
  for (std::size_t i = 0; i <= n; ++i)
    if ((Q[i] % m) % mv != pw[i] % mv) return std::nullopt;
  for (auto& x : G) x %= mv;
  return std::make_pair(std::move(G), aver);
}

// compose F(X + c) mod p^a by Horner
Vec poly_shift(const Vec& F, std::uint64_t c, std::uint64_t m) {
  Vec sh = {F.back() % m};
  for (std::size_t i = F.size() - 1; i-- > 0;) {
    Vec nx(sh.size() + 1, 0);
    for (std::size_t t = 0; t < sh.size(); ++t) {
      nx[t + 1] = (nx[t + 1] + sh[t]) % m;
      nx[t] = (nx[t] + mulmod(sh[t], c, m)) % m;
    }
    nx[0] = (nx[0] + F[i] % m) % m;
    sh = std::move(nx);
  }
  return sh;
}

// single-slope, slope-zero part: separate by the factorization mod p
void split_slope_zero(std::uint32_t p, std::uint32_t a, const Vec& S, std::uint32_t mult,
                      std::vector<Piece>& out) {
  const std::uint64_t m = padic_modulus(p, a);
  std::vector<std::uint32_t> Sbar(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) Sbar[i] = static_cast<std::uint32_t>(S[i] % p);
  uni::UniFactors uf = uni::factor(Sbar, p);
  if (uf.factors.size() <= 1) {
    std::uint32_t e = uf.factors.empty() ? 1 : uf.factors[0].second;
    std::size_t gdeg = uf.factors.empty() ? 0 : uf.factors[0].first.size() - 1;
    if (e >= 2) {
      // a single g^e that is not a perfect power (the caller already tried)
      if (gdeg == 1) {
        // distinct roots in one residue class: shift T = c + U so every root
        // of the shifted polynomial gains positive valuation, split there,
        // and translate the pieces back
        std::uint64_t c = (p - uf.factors[0].first[0] % p) % p;
        Vec sh = poly_shift(S, c, m);
        std::size_t us = 0;
        while (us + 1 < sh.size() && padic_val(sh[us], p, a) >= a) ++us;
        if (us > 0)
          out.push_back({Vec{(m - c) % m, 1}, 0, 1, a, mult * static_cast<std::uint32_t>(us), true});
        if (sh.size() - us > 1) {
          Vec core(sh.begin() + static_cast<std::ptrdiff_t>(us), sh.end());
          std::vector<Piece> sub;
          split_all(p, a, core, mult, sub);
          for (auto& pc : sub) {
            std::uint64_t mm = padic_modulus(p, pc.aprec);
            pc.poly = poly_shift(pc.poly, (mm - c % mm) % mm, mm);
            pc.num = 0;
            pc.den = 1; // back in T the whole class sits on slope zero
            out.push_back(std::move(pc));
          }
        }
        return;
      }
    }
    bool cert = e == 1;
    out.push_back({S, 0, 1, a, mult, cert || S.size() == 2});
    return;
  }
  // split off the first block g^e against the rest; both lift monic
  Vec G0 = {1}, H0 = {1};
  std::vector<std::uint32_t> acc = {1};
  for (std::uint32_t e = 0; e < uf.factors[0].second; ++e)
    acc = uni::mul(acc, uf.factors[0].first, p);
  G0.assign(acc.begin(), acc.end());
  std::vector<std::uint32_t> rest = {uf.unit};
  for (std::size_t i = 1; i < uf.factors.size(); ++i)
    for (std::uint32_t e = 0; e < uf.factors[i].second; ++e)
      rest = uni::mul(rest, uf.factors[i].first, p);
  // make the cofactor monic mod p (the unit belongs to neither block)
  std::uint32_t lc = rest.back();
  if (lc != 1) {
    std::uint32_t li = 1, base = lc % p, e = p - 2;
    while (e) {
      if (e & 1) li = static_cast<std::uint32_t>((static_cast<std::uint64_t>(li) * base) % p);
      base = static_cast<std::uint32_t>((static_cast<std::uint64_t>(base) * base) % p);
      e >>= 1;
    }
    for (auto& c : rest) c = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * li) % p);
  }
  H0.assign(rest.begin(), rest.end());
  auto sp = newton_pair(p, a, S, G0, H0, 0, 1);
  if (!sp) throw PrecisionError("slope_factorization: mod-p block lift stalled");
  (void)m;
  split_newton_pieces(p, a, *sp, mult, out);
}

void split_all(std::uint32_t p, std::uint32_t a, const Vec& S, std::uint32_t mult,
               std::vector<Piece>& out) {
  const std::size_t n = S.size() - 1;
  if (n == 0) return;
  if (n == 1) {
    out.push_back({S, static_cast<std::int64_t>(padic_val(S[0], p, a)), 1, a, mult, true});
    return;
  }
  // Perfect powers first: S = R^r shrinks every later step (the newton
  // systems get smaller and a rescale of R costs r times fewer digits), and
  // repeated factors inside one slope class are not separable by any of them.
  for (std::uint32_t r = 2; r <= n; ++r) {
    bool prime = true;
    for (std::uint32_t q = 2; q * q <= r; ++q)
      if (r % q == 0) {
        prime = false;
        break;
      }
    if (!prime || n % r != 0) continue;
    if (auto root = try_kth_root(p, a, S, r)) {
      split_all(p, root->second, root->first, mult * r, out);
      return;
    }
  }
  auto segs = newton_polygon(p, a, S);
  if (segs.size() >= 2) {
    // isolate the smallest-slope class (rightmost hull segment)
    std::size_t msplit = n - segs[0].width;
    Vec G0(msplit + 1, 0), H0(S.begin() + static_cast<std::ptrdiff_t>(msplit), S.end());
    G0[msplit] = 1;
    // weighted progress norm: sigma strictly between the two smallest slopes
    std::int64_t sn = segs[0].num * segs[1].den + segs[1].num * segs[0].den;
    std::int64_t sd = 2 * segs[0].den * segs[1].den;
    std::int64_t g = igcd(sn, sd);
    if (g > 1) {
      sn /= g;
      sd /= g;
    }
    auto sp = newton_pair(p, a, S, G0, H0, sn, sd);
    if (!sp)
      throw PrecisionError("slope_factorization: newton iteration for a slope split stalled");
    split_newton_pieces(p, a, *sp, mult, out);
    return;
  }
  if (segs.empty()) throw std::logic_error("slope_factorization: empty polygon");
  std::int64_t h = segs[0].num, w = segs[0].den;
  if (h == 0) {
    split_slope_zero(p, a, S, mult, out);
    return;
  }
  if (w == static_cast<std::int64_t>(n)) {
    out.push_back({S, h, w, a, mult, true}); // totally ramified: certified irreducible
    return;
  }
  if (w == 1) {
    // integer slope: T = p^h * U brings the class to slope zero
    std::uint32_t drop = static_cast<std::uint32_t>(h) * static_cast<std::uint32_t>(n);
    if (a <= drop)
      throw PrecisionError("slope_factorization: rescaling exhausts the p-adic precision");
    std::uint32_t a2 = a - drop;
    std::uint64_t m2 = padic_modulus(p, a2);
    Vec Q2(S.size());
    for (std::size_t i = 0; i <= n; ++i) {
      std::uint32_t need = static_cast<std::uint32_t>(h) * static_cast<std::uint32_t>(n - i);
      std::uint64_t pk = need == 0 ? 1 : padic_modulus(p, std::min(need, a));
      if (S[i] % pk != 0) throw std::logic_error("slope_factorization: polygon bound violated");
      Q2[i] = (S[i] / pk) % m2;
    }
    std::vector<Piece> sub;
    split_all(p, a2, Q2, mult, sub);
    for (auto& pc : sub) {
      // map back: F(U) -> p^{h deg F} F(T / p^h)
      std::size_t d = pc.poly.size() - 1;
      std::uint64_t mm = padic_modulus(p, pc.aprec);
      Vec back(pc.poly.size());
      for (std::size_t i = 0; i <= d; ++i) {
        std::uint32_t up = static_cast<std::uint32_t>(h) * static_cast<std::uint32_t>(d - i);
        std::uint64_t scale = 1;
        for (std::uint32_t t = 0; t < up && scale < mm; ++t) scale *= p;
        back[i] = mulmod(pc.poly[i] % mm, scale % mm, mm);
      }
      pc.poly = std::move(back);
      pc.num += h * pc.den;
      out.push_back(std::move(pc));
    }
    return;
  }
  // fractional slope of width < degree and not a perfect power: a further
  // split would need ramified arithmetic
  out.push_back({S, h, w, a, mult, false});
}

} // namespace

std::vector<NewtonSegment> newton_polygon(std::uint32_t p, std::uint32_t aprec,
                                          const std::vector<std::uint64_t>& poly) {
  Vec f = pp::trim(poly);
  std::uint64_t m = padic_modulus(p, aprec);
  if (f.size() < 2) throw std::invalid_argument("newton_polygon: degree must be positive");
  if (f.back() % m != 1) throw std::invalid_argument("newton_polygon: polynomial must be monic");
  if (f[0] % m == 0)
    throw PrecisionError("newton_polygon: constant coefficient vanishes at working precision");

  std::vector<Pt> pts;
  std::vector<std::int64_t> unknown;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::uint32_t v = padic_val(f[i], p, aprec);
    if (v < aprec)
      pts.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(v)});
    else
      unknown.push_back(static_cast<std::int64_t>(i));
  }
  std::vector<Pt> hull;
  for (const Pt& q : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull[hull.size() - 1], q) <= 0)
      hull.pop_back();
    hull.push_back(q);
  }
  for (std::int64_t i : unknown)
    if (!hull_at_most(hull, i, static_cast<std::int64_t>(aprec)))
      throw PrecisionError("newton_polygon: precision too low to certify the polygon");

  std::vector<NewtonSegment> segs;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    std::int64_t rise = hull[s].y - hull[s + 1].y; // root valuation numerator
    std::int64_t run = hull[s + 1].x - hull[s].x;
    std::int64_t g = igcd(rise, run);
    if (g == 0) g = 1;
    segs.push_back({rise / g, run / g, static_cast<std::uint32_t>(run)});
  }
  std::reverse(segs.begin(), segs.end()); // ascending slope
  return segs;
}

std::vector<SlopeFactor> slope_factorization(std::uint32_t p, std::uint32_t aprec,
                                             const std::vector<std::uint64_t>& poly) {
  Vec f = pp::trim(poly);
  std::uint64_t m = padic_modulus(p, aprec);
  if (f.empty()) throw std::invalid_argument("slope_factorization: zero polynomial");
  if (f.back() % m != 1)
    throw std::invalid_argument("slope_factorization: polynomial must be monic");

  std::vector<SlopeFactor> result;
  std::size_t tpow = 0;
  while (tpow < f.size() && f[tpow] % m == 0) ++tpow;
  if (tpow > 0) {
    SlopeFactor t;
    t.poly = {0, 1};
    t.num = 1;
    t.den = 0;
    t.mult = static_cast<std::uint32_t>(tpow);
    t.aprec = aprec;
    t.certified_irreducible = true;
    result.push_back(std::move(t));
  }
  Vec Q(f.begin() + static_cast<std::ptrdiff_t>(tpow), f.end());
  if (Q.size() == 1) return result;

  // Split along the polygon; repeated factors are carried as multiplicities
  // accumulated in the tree (root extraction, shift stripping), so no prior
  // squarefree reduction is needed.
  std::vector<Piece> pieces;
  split_all(p, aprec, Q, 1, pieces);

  std::uint32_t acert = aprec;
  for (const auto& pc : pieces) acert = std::min(acert, pc.aprec);
  std::uint64_t mm = padic_modulus(p, acert);
  // two branches can land on the same polynomial at this precision; at the
  // reported precision they are the same factor, so merge the multiplicities
  {
    std::vector<Piece> uniq;
    for (auto& pc : pieces) {
      for (auto& x : pc.poly) x %= mm;
      bool dup = false;
      for (auto& u : uniq)
        if (u.poly == pc.poly) {
          u.certified = u.certified || pc.certified;
          u.mult += pc.mult;
          dup = true;
          break;
        }
      if (!dup) uniq.push_back(std::move(pc));
    }
    pieces = std::move(uniq);
  }

  std::size_t degsum = tpow;
  for (const auto& pc : pieces) degsum += (pc.poly.size() - 1) * pc.mult;
  if (degsum != f.size() - 1) throw std::logic_error("slope_factorization: degree mismatch");

  for (auto& pc : pieces) {
    SlopeFactor sf;
    sf.poly = std::move(pc.poly);
    sf.num = pc.num;
    sf.den = pc.den;
    sf.mult = pc.mult;
    sf.aprec = acert;
    sf.certified_irreducible = pc.certified;
    result.push_back(std::move(sf));
  }

  // certify the reconstruction: the product of the reported factors must
  // reproduce the input, and the verified level becomes the output precision
  {
    Vec prod = {1};
    for (const auto& sf : result)
      for (std::uint32_t t = 0; t < sf.mult; ++t) prod = pp::mul(prod, sf.poly, p, acert);
    prod.resize(std::max(prod.size(), f.size()), 0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      std::uint64_t fi = i < f.size() ? f[i] % mm : 0;
      std::uint64_t di = (prod[i] + mm - fi) % mm;
      if (di != 0) acert = std::min(acert, padic_val(di, p, acert));
    }
    if (acert == 0) throw std::logic_error("slope_factorization: reconstruction failed");
    std::uint64_t mc = padic_modulus(p, acert);
    for (auto& sf : result) {
      sf.aprec = std::min(sf.aprec, acert);
      for (auto& x : sf.poly) x %= mc;
    }
  }

  std::sort(result.begin(), result.end(), [](const SlopeFactor& x, const SlopeFactor& y) {
    auto inf = [](const SlopeFactor& s) { return s.den == 0; };
    if (inf(x) != inf(y)) return !inf(x);
    if (!inf(x)) {
      std::int64_t lhs = x.num * y.den, rhs = y.num * x.den;
      if (lhs != rhs) return lhs < rhs;
    }
    if (x.poly.size() != y.poly.size()) return x.poly.size() < y.poly.size();
    return x.poly < y.poly;
  });
  return result;
}

} // namespace iwa
