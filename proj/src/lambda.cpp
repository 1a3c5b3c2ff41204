#include "iwa/lambda.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "iwa/structure.hpp"

namespace iwa {

LambdaModule::LambdaModule(std::uint32_t pr, std::uint32_t g,
                           std::vector<std::vector<PadicSeries>> rows,
                           std::vector<std::int64_t> sh)
    : p(pr), gens(g), shifts(std::move(sh)), rels(std::move(rows)) {
  if (shifts.empty()) shifts.assign(gens, 0);
  validate();
}

void LambdaModule::validate() const {
  if (p < 2) throw std::invalid_argument("LambdaModule: need a prime");
  if (shifts.size() != gens)
    throw std::invalid_argument("LambdaModule: shift count does not match gens");
  for (const auto& row : rels) {
    if (row.size() != gens)
      throw std::invalid_argument("LambdaModule: relation width does not match gens");
    for (const auto& x : row)
      if (x.p() != p) throw std::invalid_argument("LambdaModule: mixed primes");
  }
}

std::pair<std::uint32_t, std::uint32_t> LambdaModule::precision() const {
  std::uint32_t a = 0, b = 0;
  bool first = true;
  for (const auto& row : rels)
    for (const auto& x : row) {
      if (first) {
        a = x.aprec();
        b = x.bprec();
        first = false;
      } else {
        a = std::min(a, x.aprec());
        b = std::min(b, x.bprec());
      }
    }
  return {a, b};
}

// ---- characteristic ideal -------------------------------------------------

// Dense Laplace expansion.  Zero entries are multiplied through rather than
// skipped so the precision of the result reflects their O(p^a) uncertainty.
static PadicSeries padic_det(const std::vector<std::vector<PadicSeries>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  PadicSeries acc;
  bool have = false;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<PadicSeries>> sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<PadicSeries> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    PadicSeries term = m[0][j] * padic_det(sub);
    if (!have) {
      acc = term;
      have = true;
    } else {
      acc = (j % 2 == 0) ? acc + term : acc - term;
    }
  }
  return acc;
}

// All g x g minors of the relation matrix, in row-subset order.
static std::vector<PadicSeries> maximal_minors(const LambdaModule& M) {
  std::size_t m = M.rels.size(), g = M.gens;
  if (g == 0) return {};
  if (g > 5 || m > 16)
    throw std::domain_error("mu_lambda: relation matrix too large for dense minor expansion");
  std::vector<PadicSeries> out;
  std::vector<std::size_t> idx(g);
  for (std::size_t i = 0; i < g; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<PadicSeries>> sq;
    sq.reserve(g);
    for (std::size_t i : idx) sq.push_back(M.rels[i]);
    out.push_back(padic_det(sq));
    // next combination
    std::size_t k = g;
    while (k > 0 && idx[k - 1] == m - g + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t i = k; i < g; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

static PadicSeries gcd_as_series(std::uint32_t p, std::uint32_t mu,
                                 const std::vector<std::uint64_t>& dist,
                                 std::uint32_t aprec, std::uint32_t bwindow) {
  bwindow = std::max<std::uint32_t>(bwindow, static_cast<std::uint32_t>(dist.size() + 1));
  PadicSeries s(p, aprec, bwindow);
  for (std::size_t i = 0; i < dist.size(); ++i)
    s.set_coeff(static_cast<std::uint32_t>(i), dist[i] % padic_modulus(p, aprec));
  std::int64_t pk = 1;
  for (std::uint32_t i = 0; i < mu; ++i) pk *= p;
  return s.scaled(pk); // exact p-power scaling keeps aprec + mu honest
}

// Window-truncation drift: preparing a degree-lam distinguished part of min
// slope s under window T^b pins its representative down to only about
// (b - lam) * s / lam p-digits.  The Euclid chain treats remainders within
// min(4, a/2) digits of the precision ceiling as terminating zeros, so the
// working precision must sit low enough that window drift lands in that trap
// instead of being mistaken for a genuine remainder.
static std::uint32_t window_clamp(std::uint32_t p, std::uint32_t a, std::uint32_t b,
                                  const std::vector<std::uint64_t>& dist) {
  std::size_t lam = dist.size() - 1;
  if (lam < 2) return a;
  std::size_t k = 0;
  while (k < dist.size() && dist[k] == 0) ++k; // exact T^k part carries no drift
  std::vector<std::uint64_t> g(dist.begin() + k, dist.end());
  if (g.size() <= 2) return a;
  auto segs = newton_polygon(p, a, g);
  if (segs.empty() || segs[0].den == 0) return a;
  std::uint64_t pinned =
      (static_cast<std::uint64_t>(b) - lam) * segs[0].num / (segs[0].den * lam) + 4;
  if (pinned >= a) return a;
  return std::max<std::uint64_t>(2, pinned);
}

LambdaChar mu_lambda(const LambdaModule& M) {
  M.validate();
  if (M.gens == 0) return LambdaChar{0, 0, {1}, M.precision().first, {}};
  if (M.rels.size() < M.gens)
    throw std::invalid_argument("mu_lambda: fewer relations than generators, not torsion");

  std::vector<PadicSeries> minors = maximal_minors(M);
  std::uint32_t bmax = 1, a_work = 0;
  for (auto& mi : minors) bmax = std::max(bmax, mi.bprec());
  for (const auto& mi : minors) {
    if (mi.is_zero()) continue;
    WeierstrassData wd = weierstrass_prepare(mi);
    std::uint32_t cl = window_clamp(M.p, mi.aprec(), mi.bprec(), wd.dist);
    a_work = a_work == 0 ? cl : std::min(a_work, cl);
  }
  for (auto& mi : minors)
    if (a_work > 0 && mi.aprec() > a_work) mi = mi.with_aprec(a_work);

  bool have = false;
  std::uint32_t mu = 0, aprec = 0;
  std::vector<std::uint64_t> dist;
  for (const auto& mi : minors) {
    if (mi.is_zero()) continue;
    LambdaGcd gc = have ? lambda_gcd(gcd_as_series(M.p, mu, dist, aprec, bmax), mi)
                        : lambda_gcd(mi, mi);
    mu = gc.mu;
    dist = gc.dist;
    aprec = gc.aprec;
    have = true;
    if (mu == 0 && dist.size() == 1) break; // unit ideal: gcd cannot shrink further
  }
  if (!have)
    throw std::invalid_argument("mu_lambda: no maximal minor is nonzero within precision");

  LambdaChar out;
  out.mu = mu;
  out.lambda = static_cast<std::uint32_t>(dist.size() - 1);
  out.dist = dist;
  out.aprec = aprec;
  if (out.lambda > 0) out.factors = slope_factorization(M.p, aprec, dist);
  return out;
}

bool lambda_is_pseudo_null(const LambdaModule& M) {
  LambdaChar c = mu_lambda(M);
  return c.mu == 0 && c.lambda == 0;
}

static std::string tpoly_str(const std::vector<std::uint64_t>& f) {
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(f[i]);
    } else {
      if (f[i] != 1) s += std::to_string(f[i]) + "*";
      s += (i == 1) ? "T" : "T^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string LambdaChar::str() const {
  std::string s;
  if (mu > 0) s += "(p)^" + std::to_string(mu);
  for (const auto& f : factors) {
    if (!s.empty()) s += " * ";
    s += "(" + tpoly_str(f.poly) + ")^" + std::to_string(f.mult);
    if (!f.certified_irreducible) s += "?";
  }
  if (s.empty()) s = "(1)";
  return s + "  mod p^" + std::to_string(aprec);
}

// ---- associated graded ----------------------------------------------------

RingPtr gr_lambda_ring(std::uint32_t p) { return make_ring(p, {"X0", "X1"}); }

GradedPoly principal_symbol(const RingPtr& R, const PadicSeries& x) {
  if (!R || R->vars.size() != 2)
    throw std::invalid_argument("principal_symbol: expected a two-variable gr ring");
  if (R->p != x.p()) throw std::invalid_argument("principal_symbol: prime mismatch");
  const std::uint32_t p = x.p(), a = x.aprec();
  const std::int64_t w0 = R->weights[0], w1 = R->weights[1];
  const std::int64_t cap =
      std::min<std::int64_t>(static_cast<std::int64_t>(a) * w0,
                             static_cast<std::int64_t>(x.bprec()) * w1);

  std::int64_t best = cap;
  for (std::uint32_t i = 0; i < x.coeffs().size(); ++i) {
    std::uint64_t c = x.coeffs()[i];
    if (c == 0) continue;
    std::int64_t v = static_cast<std::int64_t>(padic_val(c, p, a)) * w0 + i * w1;
    best = std::min(best, v);
  }
  if (best >= cap)
    throw PrecisionError("principal_symbol: value not certified at this precision");

  GradedPoly s = GradedPoly::zero(R);
  for (std::uint32_t i = 0; i < x.coeffs().size(); ++i) {
    std::uint64_t c = x.coeffs()[i];
    if (c == 0) continue;
    std::uint32_t j = padic_val(c, p, a);
    if (static_cast<std::int64_t>(j) * w0 + i * w1 != best) continue;
    std::uint64_t unit = c;
    for (std::uint32_t t = 0; t < j; ++t) unit /= p;
    s = s + GradedPoly::monomial(R, {j, i}, static_cast<std::uint32_t>(unit % p));
  }
  return s;
}

namespace {

// One vector of Lambda_trunc^g: g coefficient arrays mod (p^a, T^b), plus the
// provenance flag the certificate cares about.  Fresh vectors are the given
// relation rows; derived ones are p- and T-multiples of registered pivots,
// whose symbols lie in the generated module by construction.
struct GrVec {
  std::vector<std::vector<std::uint64_t>> c; // [gens][b]
  bool fresh = false;
  std::uint64_t seq = 0;
};

struct GrCtx {
  std::uint32_t p, a, b, g;
  std::uint64_t pmod;
  std::vector<std::int64_t> k; // shifts
  std::int64_t w0, w1, vcap;

  std::int64_t value(const GrVec& v) const {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t comp = 0; comp < g; ++comp)
      for (std::uint32_t i = 0; i < b; ++i) {
        std::uint64_t x = v.c[comp][i];
        if (x == 0) continue;
        std::int64_t val =
            static_cast<std::int64_t>(padic_val(x, p, a)) * w0 + i * w1 + k[comp];
        best = std::min(best, val);
      }
    return best; // int64 max when zero in the box
  }

  // digit of component comp, coefficient i, p-level j
  std::uint32_t digit(const GrVec& v, std::uint32_t comp, std::uint32_t j,
                      std::uint32_t i) const {
    std::uint64_t x = v.c[comp][i];
    for (std::uint32_t t = 0; t < j; ++t) x /= p;
    return static_cast<std::uint32_t>(x % p);
  }

  void submul(GrVec& v, std::uint64_t s, const GrVec& u) const {
    for (std::uint32_t comp = 0; comp < g; ++comp)
      for (std::uint32_t i = 0; i < b; ++i) {
        std::uint64_t t = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(s) * u.c[comp][i]) % pmod);
        v.c[comp][i] = (v.c[comp][i] + pmod - t) % pmod;
      }
  }

  void scale(GrVec& v, std::uint64_t s) const {
    for (auto& row : v.c)
      for (auto& x : row)
        x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(s) * x) % pmod);
  }

  GrVec mul_p(const GrVec& v) const {
    GrVec w = v;
    w.fresh = false;
    for (auto& row : w.c)
      for (auto& x : row)
        x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(p) * x) % pmod);
    return w;
  }

  GrVec mul_T(const GrVec& v) const {
    GrVec w = v;
    w.fresh = false;
    for (auto& row : w.c) {
      row.insert(row.begin(), 0);
      row.pop_back();
    }
    return w;
  }

  // symbol of v at its value n as a row of graded polynomials
  std::vector<GradedPoly> symbol(const GrVec& v, std::int64_t n, const RingPtr& R) const {
    std::vector<GradedPoly> row(g, GradedPoly::zero(R));
    for (std::uint32_t comp = 0; comp < g; ++comp)
      for (std::uint32_t i = 0; i < b; ++i) {
        std::uint64_t x = v.c[comp][i];
        if (x == 0) continue;
        std::uint32_t j = padic_val(x, p, a);
        if (static_cast<std::int64_t>(j) * w0 + i * w1 + k[comp] != n) continue;
        row[comp] = row[comp] + GradedPoly::monomial(R, {j, i}, digit(v, comp, j, i));
      }
    return row;
  }
};

// digit positions ordered by (component, T-index, p-level)
using Pos = std::array<std::uint32_t, 3>;

} // namespace

GradedBridge associated_graded(const LambdaModule& M) {
  M.validate();
  RingPtr R = gr_lambda_ring(M.p);
  auto [a, b] = M.precision();
  if (M.rels.empty()) {
    GradedBridge out;
    out.pres = ModulePresentation(R, M.gens, {}, M.shifts);
    out.value_bound = std::numeric_limits<std::int64_t>::max();
    return out;
  }
  if (a < 2 || b < 2)
    throw PrecisionError("associated_graded: relation matrix carries no usable precision");

  GrCtx cx;
  cx.p = M.p;
  cx.a = a;
  cx.b = b;
  cx.g = M.gens;
  cx.pmod = padic_modulus(M.p, a);
  cx.k = M.shifts;
  cx.w0 = R->weights[0];
  cx.w1 = R->weights[1];
  std::int64_t kmin = *std::min_element(cx.k.begin(), cx.k.end());
  cx.vcap = std::min<std::int64_t>(static_cast<std::int64_t>(a) * cx.w0,
                                   static_cast<std::int64_t>(b) * cx.w1) +
            kmin;

  // Priority queue ordered by (value, derived-before-fresh, insertion order) so
  // multiples of earlier pivots prune later relation rows before those rows
  // can register redundant generators.  Values are recomputed lazily on pop.
  struct QEnt {
    std::int64_t val;
    int freshness;
    std::uint64_t seq;
    std::size_t idx;
    bool operator>(const QEnt& o) const {
      return std::tie(val, freshness, seq) > std::tie(o.val, o.freshness, o.seq);
    }
  };
  std::priority_queue<QEnt, std::vector<QEnt>, std::greater<QEnt>> queue;
  std::vector<GrVec> pool;
  std::uint64_t seq = 0;

  auto push = [&](GrVec v) {
    std::int64_t n = cx.value(v);
    if (n == std::numeric_limits<std::int64_t>::max()) return;        // zero in the box
    if (!v.fresh && n >= cx.vcap) return; // multiple of a pivot, already in the span
    v.seq = seq++;
    pool.push_back(std::move(v));
    const GrVec& back = pool.back();
    queue.push(QEnt{n, back.fresh ? 1 : 0, back.seq, pool.size() - 1});
  };

  for (const auto& row : M.rels) {
    GrVec v;
    v.fresh = true;
    v.c.assign(cx.g, std::vector<std::uint64_t>(cx.b, 0));
    bool zero_row = true;
    for (std::uint32_t comp = 0; comp < cx.g; ++comp) {
      if (!row[comp].is_zero()) zero_row = false;
      const PadicSeries red = row[comp].with_aprec(a);
      for (std::uint32_t i = 0; i < cx.b && i < red.coeffs().size(); ++i)
        v.c[comp][i] = red.coeffs()[i];
    }
    if (zero_row) continue; // the zero relation contributes nothing
    if (cx.value(v) >= cx.vcap)
      throw PrecisionError(
          "associated_graded: a relation row has no certified initial form at this precision");
    push(std::move(v));
  }

  std::map<Pos, GrVec> pivots;         // leading digit position -> normalized pivot
  std::vector<std::vector<GradedPoly>> gens_out;
  std::uint32_t unresolved = 0;

  while (!queue.empty()) {
    QEnt top = queue.top();
    queue.pop();
    GrVec v = std::move(pool[top.idx]);
    pool[top.idx] = GrVec{};
    std::int64_t n = cx.value(v);
    if (n == std::numeric_limits<std::int64_t>::max()) continue;
    if (n > top.val) { // stale entry: requeue at the true value
      if (!v.fresh && n >= cx.vcap) continue;
      pool[top.idx] = std::move(v);
      queue.push(QEnt{n, top.freshness, top.seq, top.idx});
      continue;
    }

    while (true) {
      n = cx.value(v);
      if (n == std::numeric_limits<std::int64_t>::max()) break; // explained at full precision
      if (n >= cx.vcap) {
        // nonzero reduction residue at the certification boundary: the pieces
        // below vcap are unaffected, but the generator list is only complete
        // below the bound
        ++unresolved;
        break;
      }
      // scan the value-n digit positions in order for the first nonzero digit
      bool registered = false, progressed = false;
      for (std::uint32_t comp = 0; comp < cx.g && !registered && !progressed; ++comp) {
        for (std::uint32_t i = 0; i < cx.b; ++i) {
          std::int64_t rest = n - cx.k[comp] - static_cast<std::int64_t>(i) * cx.w1;
          if (rest < 0 || rest % cx.w0 != 0) continue;
          std::int64_t j = rest / cx.w0;
          if (j >= static_cast<std::int64_t>(cx.a)) continue;
          std::uint32_t d = cx.digit(v, comp, static_cast<std::uint32_t>(j), i);
          if (d == 0) continue;
          Pos pos{comp, i, static_cast<std::uint32_t>(j)};
          auto it = pivots.find(pos);
          if (it != pivots.end()) {
            cx.submul(v, d, it->second); // pivot has digit 1 there; kills this digit
            progressed = true;
          } else {
            // new pivot: normalize the full coefficient to p^j so the leading
            // digit is exactly 1, record, and close under p- and T-multiples
            std::uint64_t unit = v.c[comp][i];
            for (std::int64_t t = 0; t < j; ++t) unit /= cx.p;
            cx.scale(v, padic_inv(unit, cx.p, cx.a));
            if (v.fresh) gens_out.push_back(cx.symbol(v, n, R));
            push(cx.mul_p(v));
            push(cx.mul_T(v));
            pivots.emplace(pos, std::move(v));
            registered = true;
          }
          break;
        }
      }
      if (registered) break;
      // progressed: rescan (the first nonzero position strictly advances);
      // neither: every value-n digit was zero, so the value went up
    }
  }

  GradedBridge out;
  out.pres = ModulePresentation(R, M.gens, std::move(gens_out), M.shifts);
  out.value_bound = cx.vcap;
  out.unresolved = unresolved;
  return out;
}

std::vector<GradedPoly> good_filtration_W(const LambdaModule& M,
                                          const std::vector<std::int64_t>& shifts) {
  LambdaModule N = M;
  if (!shifts.empty()) {
    if (shifts.size() != M.gens)
      throw std::invalid_argument("good_filtration_W: shift count does not match gens");
    N.shifts = shifts;
  }
  return height_one_support(associated_graded(N).pres);
}

} // namespace iwa
