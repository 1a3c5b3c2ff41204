#include "iwa/pgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "iwa/padic.hpp"

namespace iwa {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint32_t vp_of(std::uint64_t x, std::uint32_t p) {
  std::uint32_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

void require_same_group(const GroupElement& g, const GroupElement& h) {
  if (g.p != h.p || g.n != h.n || g.N != h.N || g.c != h.c)
    throw std::invalid_argument("group elements live in different congruence groups");
}

// difference g - identity, entries mod p^N
std::vector<std::uint64_t> diff_matrix(const GroupElement& g, std::uint64_t pm) {
  std::vector<std::uint64_t> d(g.m);
  for (std::uint32_t i = 0; i < g.n; ++i) d[i * g.n + i] = (d[i * g.n + i] + pm - 1) % pm;
  return d;
}

// minimal entry valuation of g - 1; N when the difference vanishes at the modulus
std::uint32_t matrix_val(const GroupElement& g) {
  std::uint64_t pm = padic_modulus(g.p, g.N);
  auto d = diff_matrix(g, pm);
  std::uint32_t best = g.N;
  for (std::uint64_t x : d)
    if (x != 0) best = std::min(best, vp_of(x, g.p));
  return best;
}

// leading matrix of g - 1 mod p; caller guarantees a nonzero difference
std::vector<std::uint32_t> lead_matrix(const GroupElement& g) {
  std::uint64_t pm = padic_modulus(g.p, g.N);
  auto d = diff_matrix(g, pm);
  std::uint32_t v = matrix_val(g);
  std::uint64_t pv = 1;
  for (std::uint32_t i = 0; i < v; ++i) pv *= g.p;
  std::vector<std::uint32_t> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    out[i] = static_cast<std::uint32_t>((d[i] / pv) % g.p);
  return out;
}

// Certified comparison helpers on valuations known at modulus p^N: an Omega
// with `atleast` set stands for the interval [num/den, infinity).  Each
// comparison returns +1 / -1 only when the interval arithmetic decides it.
struct Rat {
  std::int64_t num, den;
};

int rat_cmp(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd) {
  __int128 l = static_cast<__int128>(an) * bd, r = static_cast<__int128>(bn) * ad;
  return l < r ? -1 : (l > r ? 1 : 0);
}

Rat rat_add(Rat a, Rat b) {
  std::int64_t d = std::lcm(a.den, b.den);
  return {a.num * (d / a.den) + b.num * (d / b.den), d};
}

Rat rat_min(Rat a, Rat b) { return rat_cmp(a.num, a.den, b.num, b.den) <= 0 ? a : b; }

// x >= bound, certified tri-state: +1 yes, -1 no, 0 undecidable at modulus
int cmp_ge(const Omega& x, Rat bound) {
  int c = rat_cmp(x.num, x.den, bound.num, bound.den);
  if (x.atleast) return c >= 0 ? 1 : 0;
  return c >= 0 ? 1 : -1;
}

// x == bound, certified tri-state
int cmp_eq(const Omega& x, Rat bound) {
  int c = rat_cmp(x.num, x.den, bound.num, bound.den);
  if (x.atleast) return c > 0 ? -1 : 0;
  return c == 0 ? 1 : -1;
}

std::string rat_str(std::int64_t num, std::int64_t den) {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

} // namespace

GroupElement::GroupElement(std::uint32_t p_, std::uint32_t n_, std::uint32_t N_,
                           std::uint32_t c_, std::vector<std::uint64_t> entries)
    : p(p_), n(n_), N(N_), c(c_), m(std::move(entries)) {
  validate();
}

void GroupElement::validate() const {
  std::uint64_t pm = padic_modulus(p, N); // also validates that p is prime
  if (n == 0) throw std::invalid_argument("group element: matrix size must be positive");
  if (c == 0 || (p == 2 && c < 2))
    throw std::invalid_argument("group element: congruence level must be >= 1 (>= 2 for p = 2)");
  if (c > N) throw std::invalid_argument("group element: congruence level exceeds the modulus");
  if (m.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("group element: entry count does not match the matrix size");
  std::uint64_t pc = 1;
  for (std::uint32_t i = 0; i < c; ++i) pc *= p;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint64_t x = m[i * n + j];
      if (x >= pm) throw std::invalid_argument("group element: entry out of range");
      std::uint64_t d = (x + pm - (i == j ? 1 : 0)) % pm;
      // g = 1 mod p^c; in particular det(g) is a unit mod p
      if (d % pc != 0)
        throw std::invalid_argument("group element: not congruent to the identity at level c");
    }
}

bool GroupElement::is_identity() const {
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (m[i * n + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

bool GroupElement::operator==(const GroupElement& o) const {
  return p == o.p && n == o.n && N == o.N && c == o.c && m == o.m;
}

GroupElement group_identity(std::uint32_t p, std::uint32_t n, std::uint32_t N,
                            std::uint32_t c) {
  std::vector<std::uint64_t> m(static_cast<std::size_t>(n) * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return GroupElement(p, n, N, c, std::move(m));
}

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
  require_same_group(g, h);
  std::uint64_t pm = padic_modulus(g.p, g.N);
  std::uint32_t n = g.n;
  GroupElement r = g;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      unsigned __int128 acc = 0;
      for (std::uint32_t k = 0; k < n; ++k)
        acc += static_cast<unsigned __int128>(g.m[i * n + k]) * h.m[k * n + j];
      r.m[i * n + j] = static_cast<std::uint64_t>(acc % pm);
    }
  return r;
}

GroupElement group_inv(const GroupElement& g) {
  std::uint64_t pm = padic_modulus(g.p, g.N);
  std::uint32_t n = g.n;
  // Gauss-Jordan on [g | 1]; a unit pivot exists in every column because
  // g is invertible mod p.
  std::vector<std::uint64_t> a(g.m);
  GroupElement inv = group_identity(g.p, g.n, g.N, g.c);
  std::vector<std::uint64_t>& b = inv.m;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = n;
    for (std::uint32_t r = col; r < n; ++r)
      if (a[r * n + col] % g.p != 0) {
        piv = r;
        break;
      }
    if (piv == n) throw std::invalid_argument("group element is not invertible at the modulus");
    if (piv != col)
      for (std::uint32_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(b[piv * n + j], b[col * n + j]);
      }
    std::uint64_t s = padic_inv(a[col * n + col], g.p, g.N);
    for (std::uint32_t j = 0; j < n; ++j) {
      a[col * n + j] = mulmod(a[col * n + j], s, pm);
      b[col * n + j] = mulmod(b[col * n + j], s, pm);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col) continue;
      std::uint64_t f = a[r * n + col];
      if (f == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        a[r * n + j] = (a[r * n + j] + pm - mulmod(f, a[col * n + j], pm)) % pm;
        b[r * n + j] = (b[r * n + j] + pm - mulmod(f, b[col * n + j], pm)) % pm;
      }
    }
  }
  inv.validate(); // the congruence subgroup is closed under inverse
  return inv;
}

GroupElement group_pow(const GroupElement& g, std::uint64_t k) {
  GroupElement acc = group_identity(g.p, g.n, g.N, g.c);
  GroupElement base = g;
  while (k > 0) {
    if (k & 1) acc = group_mul(acc, base);
    k >>= 1;
    if (k) base = group_mul(base, base);
  }
  return acc;
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return group_mul(group_mul(group_inv(g), group_inv(h)), group_mul(g, h));
}

std::string Omega::str() const {
  if (infinite) return "inf";
  std::string s = rat_str(num, den);
  return atleast ? ">= " + s : s;
}

ValuationSpec ValuationSpec::table(std::vector<GroupElement> elems, std::vector<Omega> values) {
  if (elems.size() != values.size())
    throw std::invalid_argument("valuation table: element and value counts differ");
  for (const auto& g : elems) g.validate();
  for (const auto& v : values)
    if (v.den <= 0) throw std::invalid_argument("valuation table: denominators must be positive");
  ValuationSpec s;
  s.builtin = false;
  s.elems = std::move(elems);
  s.values = std::move(values);
  return s;
}

Omega omega(const GroupElement& g, const ValuationSpec& spec) {
  g.validate();
  if (g.is_identity()) return Omega{g.N, 1, true, true};
  if (spec.builtin) {
    std::uint32_t v = matrix_val(g);
    // nonzero difference at the modulus: the valuation is exact
    return Omega{v, 1, false, false};
  }
  for (std::size_t i = 0; i < spec.elems.size(); ++i)
    if (spec.elems[i] == g) return spec.values[i];
  throw std::out_of_range("omega: element not covered by the valuation table");
}

ValuationReport verify_p_valuation(const std::vector<GroupElement>& sample,
                                   const ValuationSpec& spec) {
  ValuationReport rep;
  rep.elements = sample.size();
  if (sample.empty()) return rep;
  for (const auto& g : sample) {
    g.validate();
    require_same_group(sample.front(), g);
  }
  std::uint32_t p = sample.front().p, N = sample.front().N;

  auto look = [&](const GroupElement& g) -> std::optional<Omega> {
    try {
      return omega(g, spec);
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
  };

  for (std::size_t i = 0; i < sample.size(); ++i) {
    const GroupElement& g = sample[i];
    if (g.is_identity()) continue; // omega = inf is exactly right for 1
    auto wg = look(g);
    if (!wg) {
      rep.inconclusive.push_back({"range", i, i, "element not covered by the valuation table"});
      continue;
    }
    // (1)  1/(p-1) < omega(g) < inf
    if (wg->infinite) {
      rep.failures.push_back({"range", i, i, "omega = inf on a non-identity element"});
    } else {
      int c = rat_cmp(wg->num, wg->den, 1, p - 1);
      if (wg->atleast) {
        if (c <= 0)
          rep.inconclusive.push_back(
              {"range", i, i, "lower bound " + wg->str() + " does not clear 1/(p-1)"});
      } else if (c <= 0) {
        rep.failures.push_back({"range", i, i, "omega = " + wg->str() + " <= 1/(p-1)"});
      }
    }
    // (4)  omega(g^p) = omega(g) + 1, with equality
    if (wg->atleast) {
      rep.inconclusive.push_back({"power", i, i, "omega(g) itself is only bounded below"});
    } else {
      GroupElement gp = group_pow(g, p);
      Rat target{wg->num + wg->den, wg->den};
      if (gp.is_identity() && rat_cmp(N, 1, target.num, target.den) <= 0) {
        rep.inconclusive.push_back(
            {"power", i, i, "g^p vanishes at the modulus; need omega = " + rat_str(target.num, target.den)});
      } else {
        auto wp = look(gp);
        if (!wp) {
          rep.inconclusive.push_back({"power", i, i, "g^p not covered by the valuation table"});
        } else {
          int c = cmp_eq(*wp, target);
          if (c < 0)
            rep.failures.push_back({"power", i, i,
                                    "omega(g^p) = " + wp->str() + ", expected " +
                                        rat_str(target.num, target.den)});
          else if (c == 0)
            rep.inconclusive.push_back({"power", i, i, "modulus too small to pin omega(g^p)"});
        }
      }
    }
  }

  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      const GroupElement &g = sample[i], &h = sample[j];
      if (g.is_identity() && h.is_identity()) continue;
      ++rep.pairs;
      auto wg = look(g), wh = look(h);
      if (!wg || !wh) {
        rep.inconclusive.push_back({"quotient", i, j, "pair not covered by the valuation table"});
        continue;
      }
      // (2)  omega(g h^-1) >= min(omega(g), omega(h)); the bound interval is
      // [min of lower ends, min of upper ends] and only a decided comparison
      // against it counts.
      {
        GroupElement q = group_mul(g, group_inv(h));
        if (!q.is_identity()) { // omega(1) = inf passes vacuously
          auto wq = look(q);
          if (!wq) {
            rep.inconclusive.push_back(
                {"quotient", i, j, "g h^-1 not covered by the valuation table"});
          } else {
            Rat lo = rat_min({wg->num, wg->den}, {wh->num, wh->den});
            bool hi_inf = wg->atleast && wh->atleast;
            Rat hi = hi_inf ? lo
                            : (wg->atleast ? Rat{wh->num, wh->den}
                                           : (wh->atleast ? Rat{wg->num, wg->den}
                                                          : rat_min({wg->num, wg->den},
                                                                    {wh->num, wh->den})));
            if (hi_inf) {
              rep.inconclusive.push_back({"quotient", i, j, "both valuations only bounded below"});
            } else if (cmp_ge(*wq, hi) == 1) {
              // certified
            } else if (!wq->atleast && rat_cmp(wq->num, wq->den, lo.num, lo.den) < 0) {
              rep.failures.push_back({"quotient", i, j,
                                      "omega(g h^-1) = " + wq->str() + " < min = " +
                                          rat_str(lo.num, lo.den)});
            } else {
              rep.inconclusive.push_back(
                  {"quotient", i, j, "modulus too small to compare omega(g h^-1) with the min"});
            }
          }
        }
      }
      // (3)  omega([g, h]) >= omega(g) + omega(h)
      if (!g.is_identity() && !h.is_identity()) {
        GroupElement cm = commutator(g, h);
        if (!cm.is_identity()) {
          auto wc = look(cm);
          if (!wc) {
            rep.inconclusive.push_back(
                {"commutator", i, j, "[g, h] not covered by the valuation table"});
          } else if (wg->atleast || wh->atleast) {
            // the true bound omega(g) + omega(h) is only bounded below, so
            // nothing can be certified against it
            rep.inconclusive.push_back(
                {"commutator", i, j, "omega(g) or omega(h) is only bounded below"});
          } else {
            Rat bound = rat_add({wg->num, wg->den}, {wh->num, wh->den});
            int c = cmp_ge(*wc, bound);
            if (c == -1) {
              rep.failures.push_back({"commutator", i, j,
                                      "omega([g,h]) = " + wc->str() + " < " +
                                          rat_str(bound.num, bound.den)});
            } else if (c == 0) {
              rep.inconclusive.push_back(
                  {"commutator", i, j, "modulus too small to compare omega([g,h]) with the sum"});
            }
          }
        } else {
          Rat bound = rat_add({wg->num, wg->den}, {wh->num, wh->den});
          bool bound_exact = !wg->atleast && !wh->atleast;
          if (!(bound_exact && rat_cmp(N, 1, bound.num, bound.den) >= 0))
            rep.inconclusive.push_back(
                {"commutator", i, j,
                 "[g, h] vanishes at the modulus; need omega >= " + rat_str(bound.num, bound.den)});
        }
      }
    }
  }
  return rep;
}

GrSymbol gr_bracket(const GroupElement& g, const GroupElement& h, const ValuationSpec& spec) {
  require_same_group(g, h);
  g.validate();
  h.validate();
  GrSymbol out;
  if (g.is_identity() || h.is_identity()) {
    out.zero = true;
    return out;
  }
  Omega wg = omega(g, spec), wh = omega(h, spec);
  if (wg.atleast || wh.atleast) {
    out.inconclusive = true;
    return out;
  }
  Rat nu = rat_add({wg.num, wg.den}, {wh.num, wh.den});
  out.degree = Omega{nu.num, nu.den, false, false};
  GroupElement cm = commutator(g, h);
  if (cm.is_identity()) {
    // omega([g,h]) >= N: zero in degree nu whenever nu < N
    if (rat_cmp(nu.num, nu.den, g.N, 1) < 0)
      out.zero = true;
    else
      out.inconclusive = true;
    return out;
  }
  Omega wc;
  try {
    wc = omega(cm, spec);
  } catch (const std::out_of_range&) {
    out.inconclusive = true;
    return out;
  }
  int c = rat_cmp(wc.num, wc.den, nu.num, nu.den);
  if (wc.atleast) {
    if (c > 0)
      out.zero = true;
    else
      out.inconclusive = true;
    return out;
  }
  if (c > 0) {
    out.zero = true;
    return out;
  }
  if (c < 0)
    throw std::domain_error(
        "gr_bracket: omega([g,h]) < omega(g) + omega(h); omega is not a p-valuation on this pair");
  out.lead = lead_matrix(cm);
  return out;
}

namespace {

// F_p Gaussian elimination; rows are modified in place, returns the rank.
std::size_t fp_rank(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t w = rows[0].size();
  for (std::size_t col = 0; col < w && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    std::uint64_t s = padic_inv(rows[rank][col], p, 1);
    for (std::size_t j = col; j < w; ++j)
      rows[rank][j] = static_cast<std::uint32_t>((rows[rank][j] * s) % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      std::uint32_t f = rows[r][col];
      if (f == 0) continue;
      for (std::size_t j = col; j < w; ++j)
        rows[r][j] = (rows[r][j] + p * f - f * rows[rank][j] % p) % p;
    }
    ++rank;
  }
  return rank;
}

// true when v extends the span of the basis; the basis is kept in reduced
// row echelon form so that a single reduction pass is conclusive.
bool fp_extend(std::vector<std::vector<std::uint32_t>>& basis, std::vector<std::uint32_t> v,
               std::uint32_t p) {
  auto lead_of = [](const std::vector<std::uint32_t>& r) {
    std::size_t l = 0;
    while (l < r.size() && r[l] == 0) ++l;
    return l;
  };
  for (const auto& b : basis) {
    std::size_t lead = lead_of(b);
    std::uint32_t f = v[lead];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + p * f - f * b[j] % p) % p;
  }
  std::size_t lead = lead_of(v);
  if (lead == v.size()) return false;
  std::uint64_t s = padic_inv(v[lead], p, 1);
  for (auto& x : v) x = static_cast<std::uint32_t>((x * s) % p);
  for (auto& b : basis) {
    std::uint32_t f = b[lead];
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = (b[j] + p * f - f * v[j] % p) % p;
  }
  basis.push_back(std::move(v));
  return true;
}

struct DegKey {
  std::int64_t num, den;
  bool operator<(const DegKey& o) const {
    return rat_cmp(num, den, o.num, o.den) < 0;
  }
};

DegKey norm_key(std::int64_t num, std::int64_t den) {
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

} // namespace

std::vector<std::uint32_t> weight_vector(const std::vector<GroupElement>& gens,
                                         const ValuationSpec& spec) {
  if (gens.empty()) throw std::invalid_argument("weight_vector: no generators");
  for (const auto& g : gens) {
    g.validate();
    require_same_group(gens.front(), g);
    if (g.is_identity()) throw std::invalid_argument("weight_vector: the identity is not a generator");
  }
  std::uint32_t p = gens.front().p;
  std::size_t d = gens.size();

  std::vector<Omega> w(d);
  std::int64_t e = 1;
  for (std::size_t i = 0; i < d; ++i) {
    w[i] = omega(gens[i], spec);
    if (w[i].atleast)
      throw std::invalid_argument("weight_vector: generator valuation not certified at this modulus");
    if (w[i].num <= 0)
      throw std::invalid_argument("weight_vector: generator valuations must be positive");
    e = std::lcm(e, w[i].den);
  }
  std::vector<std::uint32_t> weights(d + 1);
  weights[0] = static_cast<std::uint32_t>(e); // X0 = symbol of p; Pi raises omega by exactly 1
  for (std::size_t i = 0; i < d; ++i)
    weights[i + 1] = static_cast<std::uint32_t>(w[i].num * (e / w[i].den));

  // Rank accounting at degrees <= 3 (scaled by e): the claimed structure is
  // a free F_p[Pi]-module on the generator symbols, so the predicted
  // dimension at scaled degree m is #{(i, k) : w_i + k*e = m}.  Measured
  // dimensions come from symbols of sampled words; cells are keyed by the
  // matrix-level valuation so fractional gradings are not conflated.
  std::int64_t cap = 3 * e;
  std::map<std::int64_t, std::size_t> predicted;
  for (std::size_t i = 0; i < d; ++i)
    for (std::int64_t m = weights[i + 1]; m <= cap; m += e) ++predicted[m];

  std::map<std::pair<std::int64_t, std::uint32_t>, std::vector<std::vector<std::uint32_t>>> cells;
  auto place = [&](const GroupElement& x, std::optional<Rat> forced) {
    if (x.is_identity()) return;
    Rat deg{0, 1};
    try {
      Omega wx = omega(x, spec);
      if (wx.atleast) return;
      deg = {wx.num, wx.den};
    } catch (const std::out_of_range&) {
      if (!forced) return; // cannot grade this word under a table valuation
      deg = *forced;
    }
    if (rat_cmp(deg.num, deg.den, 3, 1) > 0) return;
    if ((e % deg.den) != 0)
      throw std::runtime_error("weight_vector: sampled symbol grades off the weight lattice at degree " +
                               rat_str(deg.num, deg.den));
    std::int64_t m = deg.num * (e / deg.den);
    auto lead = lead_matrix(x);
    fp_extend(cells[{m, matrix_val(x)}], std::move(lead), p);
  };

  // Pi-ladders of the generators: degree forced to w_i + k by the power axiom
  for (std::size_t i = 0; i < d; ++i) {
    GroupElement x = gens[i];
    Rat deg{w[i].num, w[i].den};
    for (;;) {
      std::int64_t m = deg.num * (e / deg.den);
      if (m > cap) break;
      place(x, deg);
      x = group_pow(x, p);
      deg = rat_add(deg, {1, 1});
      if (x.is_identity()) break;
    }
  }
  // short products and commutators probe for directions outside the claimed span
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      place(group_mul(gens[i], gens[j]), std::nullopt);
      if (j > i) place(commutator(gens[i], gens[j]), std::nullopt);
      for (std::size_t k = 0; k < d; ++k)
        place(group_mul(group_mul(gens[i], gens[j]), gens[k]), std::nullopt);
    }

  std::map<std::int64_t, std::size_t> measured;
  for (auto& [key, basis] : cells) measured[key.first] += basis.size();
  for (std::int64_t m = 1; m <= cap; ++m) {
    std::size_t want = predicted.count(m) ? predicted[m] : 0;
    std::size_t got = measured.count(m) ? measured[m] : 0;
    if (got < want)
      throw std::runtime_error("weight_vector: generator symbols are dependent at degree " +
                               rat_str(m, e) + " (" + std::to_string(got) + " of " +
                               std::to_string(want) + " independent)");
    if (got > want)
      throw std::runtime_error("weight_vector: sampled symbols exceed the claimed span at degree " +
                               rat_str(m, e) + "; the generators do not generate gr");
  }
  return weights;
}

std::vector<GroupElement> sample_words(const std::vector<GroupElement>& gens,
                                       std::size_t count, std::size_t maxlen,
                                       std::uint64_t seed) {
  if (gens.empty()) throw std::invalid_argument("sample_words: no generators");
  for (const auto& g : gens) {
    g.validate();
    require_same_group(gens.front(), g);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dlen(1, maxlen);
  std::uniform_int_distribution<std::size_t> dletter(0, 2 * gens.size() - 1);
  std::vector<GroupElement> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    GroupElement x = group_identity(gens[0].p, gens[0].n, gens[0].N, gens[0].c);
    std::size_t len = dlen(rng);
    for (std::size_t s = 0; s < len; ++s) {
      std::size_t l = dletter(rng);
      x = group_mul(x, l < gens.size() ? gens[l] : group_inv(gens[l - gens.size()]));
    }
    out.push_back(std::move(x));
  }
  return out;
}

GradedLieReport gr_lie_report(const std::vector<GroupElement>& gens,
                              const ValuationSpec& spec, std::int64_t max_degree) {
  if (gens.empty()) throw std::invalid_argument("gr_lie_report: no generators");
  for (const auto& g : gens) {
    g.validate();
    require_same_group(gens.front(), g);
  }
  std::uint32_t p = gens.front().p;

  // words of length <= 3 in the generators and inverses, plus p-power ladders
  std::vector<GroupElement> pool;
  auto push = [&](const GroupElement& x) {
    if (x.is_identity()) return;
    for (const auto& y : pool)
      if (y == x) return;
    pool.push_back(x);
  };
  std::vector<GroupElement> letters;
  for (const auto& g : gens) {
    letters.push_back(g);
    letters.push_back(group_inv(g));
  }
  for (const auto& a : letters) push(a);
  std::size_t len1 = pool.size();
  for (std::size_t i = 0; i < len1; ++i)
    for (const auto& b : letters) push(group_mul(pool[i], b));
  std::size_t len2 = pool.size();
  for (std::size_t i = len1; i < len2; ++i)
    for (const auto& b : letters) push(group_mul(pool[i], b));
  for (std::size_t i = 0, end = pool.size(); i < end; ++i) {
    GroupElement x = pool[i];
    for (int k = 0; k < 3; ++k) {
      x = group_pow(x, p);
      if (x.is_identity()) break;
      push(x);
    }
  }

  // bucket by certified degree and select independent leading matrices
  std::map<DegKey, GrComponent> comps;
  std::map<DegKey, std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>>> bases;
  for (const auto& x : pool) {
    Omega wx;
    try {
      wx = omega(x, spec);
    } catch (const std::out_of_range&) {
      continue;
    }
    if (wx.atleast) continue;
    if (rat_cmp(wx.num, wx.den, max_degree, 1) > 0) continue;
    DegKey key = norm_key(wx.num, wx.den);
    auto lead = lead_matrix(x);
    auto& cell = bases[key][matrix_val(x)];
    if (fp_extend(cell, lead, p)) {
      auto& comp = comps[key];
      comp.num = key.num;
      comp.den = key.den;
      comp.reps.push_back(x);
      comp.basis.push_back(std::move(lead));
    }
  }

  GradedLieReport rep;
  for (auto& [key, comp] : comps) rep.components.push_back(std::move(comp));

  for (std::size_t ci = 0; ci < rep.components.size(); ++ci)
    for (std::size_t cj = ci; cj < rep.components.size(); ++cj) {
      const auto &A = rep.components[ci], &B = rep.components[cj];
      Rat sum = rat_add({A.num, A.den}, {B.num, B.den});
      if (rat_cmp(sum.num, sum.den, max_degree, 1) > 0) continue;
      for (std::size_t bi = 0; bi < A.reps.size(); ++bi)
        for (std::size_t bj = (ci == cj ? bi + 1 : 0); bj < B.reps.size(); ++bj) {
          BracketEntry ent{ci, bi, cj, bj, gr_bracket(A.reps[bi], B.reps[bj], spec)};
          if (!ent.value.zero) rep.abelian = false;
          rep.brackets.push_back(std::move(ent));
        }
    }

  for (std::size_t ci = 0; ci < rep.components.size(); ++ci)
    for (std::size_t bi = 0; bi < rep.components[ci].reps.size(); ++bi) {
      GroupElement xp = group_pow(rep.components[ci].reps[bi], p);
      PiEntry ent{ci, bi, {}, false};
      if (xp.is_identity())
        ent.inconclusive = true;
      else
        ent.lead = lead_matrix(xp);
      rep.pi.push_back(std::move(ent));
    }

  // F_p[Pi]-rank: new directions per component, over the Pi-image of the
  // component one degree lower
  for (std::size_t ci = 0; ci < rep.components.size(); ++ci) {
    const auto& C = rep.components[ci];
    std::vector<std::vector<std::uint32_t>> img;
    for (std::size_t cp = 0; cp < rep.components.size(); ++cp) {
      Rat up = rat_add({rep.components[cp].num, rep.components[cp].den}, {1, 1});
      if (rat_cmp(up.num, up.den, C.num, C.den) != 0) continue;
      for (const auto& ent : rep.pi)
        if (ent.ci == cp && !ent.inconclusive) img.push_back(ent.lead);
    }
    std::size_t imgrank = fp_rank(img, p);
    rep.rank_d += static_cast<std::uint32_t>(C.basis.size() - std::min(C.basis.size(), imgrank));
  }
  return rep;
}

} // namespace iwa
