#include <algorithm>
#include <random>
#include <stdexcept>

#include "iwa/factor.hpp"

namespace iwa::uni {

UPoly trim(UPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

UPoly add(const UPoly& a, const UPoly& b, std::uint32_t p) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = fp::add(x, y, p);
  }
  return trim(std::move(r));
}

UPoly sub(const UPoly& a, const UPoly& b, std::uint32_t p) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = fp::sub(x, y, p);
  }
  return trim(std::move(r));
}

UPoly scale(const UPoly& a, std::uint32_t c, std::uint32_t p) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp::mul(a[i], c, p);
  return trim(std::move(r));
}

UPoly mul(const UPoly& a, const UPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = fp::add(r[i + j], fp::mul(a[i], b[j], p), p);
  }
  return trim(std::move(r));
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b, std::uint32_t p) {
  if (b.empty()) throw std::domain_error("uni::divrem by zero");
  UPoly r = a;
  if (a.size() < b.size()) return {{}, trim(std::move(r))};
  UPoly q(a.size() - b.size() + 1, 0);
  const std::uint32_t inv_lc = fp::inv(b.back(), p);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (i >= r.size() || r[i] == 0) {
      if (i == 0) break;
      continue;
    }
    std::uint32_t c = fp::mul(r[i], inv_lc, p);
    q[i - b.size() + 1] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i - b.size() + 1 + j] = fp::sub(r[i - b.size() + 1 + j], fp::mul(c, b[j], p), p);
    if (i == 0) break;
  }
  return {trim(std::move(q)), trim(std::move(r))};
}

std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b, std::uint32_t p) {
  auto [q, r] = divrem(a, b, p);
  if (!r.empty()) return std::nullopt;
  return q;
}

UPoly monic(const UPoly& a, std::uint32_t p) {
  if (a.empty()) return a;
  return scale(a, fp::inv(a.back(), p), p);
}

UPoly gcd(UPoly a, UPoly b, std::uint32_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    UPoly r = divrem(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

UPoly derivative(const UPoly& a, std::uint32_t p) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = fp::mul(a[i], static_cast<std::uint32_t>(i % p), p);
  return trim(std::move(r));
}

UPoly powmod(const UPoly& a, std::uint64_t e, const UPoly& f, std::uint32_t p) {
  UPoly base = divrem(a, f, p).second;
  UPoly r = {1};
  while (e) {
    if (e & 1) r = divrem(mul(r, base, p), f, p).second;
    base = divrem(mul(base, base, p), f, p).second;
    e >>= 1;
  }
  return r;
}

std::uint32_t eval(const UPoly& a, std::uint32_t x, std::uint32_t p) {
  std::uint32_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = fp::add(fp::mul(r, x, p), a[i], p);
  return r;
}

bool is_squarefree(const UPoly& a, std::uint32_t p) {
  if (deg(a) <= 0) return true;
  UPoly d = derivative(a, p);
  if (d.empty()) return false; // p-th power part present
  return deg(gcd(a, d, p)) == 0;
}

namespace {

// f with f' = 0 is g(x^p); over the prime field the coefficients are fixed by
// Frobenius, so the p-th root just divides the exponents.
UPoly pth_root(const UPoly& f, std::uint32_t p) {
  UPoly g((f.size() + p - 1) / p, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    if (i % p != 0) throw std::logic_error("pth_root: exponent not divisible by p");
    g[i / p] = f[i];
  }
  return trim(std::move(g));
}

// x^{p^k} mod f by iterating the Frobenius powmod
UPoly frobenius_iterate(const UPoly& start, std::uint32_t k, const UPoly& f, std::uint32_t p) {
  UPoly r = start;
  for (std::uint32_t i = 0; i < k; ++i) r = powmod(r, p, f, p);
  return r;
}

// equal-degree splitting: f is squarefree, all irreducible factors of degree d
void edf(const UPoly& f, std::uint32_t d, std::uint32_t p, std::mt19937_64& rng,
         std::vector<UPoly>& out) {
  if (deg(f) == static_cast<int>(d)) {
    out.push_back(monic(f, p));
    return;
  }
  const std::uint32_t n = static_cast<std::uint32_t>(deg(f));
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  for (;;) {
    UPoly a(n, 0);
    for (auto& c : a) c = coef(rng);
    a = trim(std::move(a));
    if (deg(a) < 1) continue;
    UPoly g = gcd(a, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) { // lucky split by a zero divisor
      edf(g, d, p, rng, out);
      edf(*divide_exact(f, g, p), d, p, rng, out);
      return;
    }
    UPoly b;
    if (p == 2) {
      // trace map onto F_2: a + a^2 + ... + a^{2^{d-1}}
      b = {};
      UPoly t = divrem(a, f, p).second;
      for (std::uint32_t i = 0; i < d; ++i) {
        b = add(b, t, p);
        t = powmod(t, 2, f, p);
      }
    } else {
      // a^{(p^d-1)/2} = (a^{1+p+...+p^{d-1}})^{(p-1)/2}, avoiding p^d overflow
      UPoly norm = {1};
      UPoly t = divrem(a, f, p).second;
      for (std::uint32_t i = 0; i < d; ++i) {
        norm = divrem(mul(norm, t, p), f, p).second;
        t = powmod(t, p, f, p);
      }
      b = powmod(norm, (p - 1) / 2, f, p);
      b = sub(b, {1}, p);
    }
    UPoly g2 = gcd(b, f, p);
    if (deg(g2) > 0 && deg(g2) < deg(f)) {
      edf(g2, d, p, rng, out);
      edf(*divide_exact(f, g2, p), d, p, rng, out);
      return;
    }
  }
}

// distinct monic irreducible divisors of f (no multiplicities)
std::vector<UPoly> distinct_divisors(UPoly f, std::uint32_t p, std::mt19937_64& rng) {
  std::vector<UPoly> out;
  f = monic(trim(std::move(f)), p);
  if (deg(f) <= 0) return out;
  UPoly d = derivative(f, p);
  if (d.empty()) return distinct_divisors(pth_root(f, p), p, rng);
  UPoly g = gcd(f, d, p);
  if (deg(g) > 0) {
    out = distinct_divisors(*divide_exact(f, g, p), p, rng);
    for (auto& h : distinct_divisors(g, p, rng)) {
      bool dup = false;
      for (const auto& k : out) dup = dup || k == h;
      if (!dup) out.push_back(std::move(h));
    }
    return out;
  }
  // f squarefree: distinct-degree then equal-degree splitting
  UPoly h = {0, 1}; // x
  UPoly rest = f;
  for (std::uint32_t dd = 1; 2 * dd <= static_cast<std::uint32_t>(deg(rest)); ++dd) {
    h = frobenius_iterate(divrem(h, rest, p).second, 1, rest, p);
    UPoly split = gcd(sub(h, {0, 1}, p), rest, p);
    if (deg(split) > 0) {
      edf(split, dd, p, rng, out);
      rest = *divide_exact(rest, split, p);
    }
  }
  if (deg(rest) > 0) out.push_back(monic(rest, p));
  return out;
}

} // namespace

UniFactors factor(const UPoly& f_in, std::uint32_t p) {
  UniFactors res;
  UPoly f = trim(f_in);
  if (f.empty()) throw std::invalid_argument("uni::factor of zero");
  res.unit = f.back();
  if (deg(f) == 0) return res;
  std::mt19937_64 rng(0x1f2e3d4c5b6a7988ull); // fixed: deterministic splits
  std::vector<UPoly> irr = distinct_divisors(f, p, rng);
  std::sort(irr.begin(), irr.end());
  UPoly rest = monic(f, p);
  for (const auto& g : irr) {
    std::uint32_t m = 0;
    for (;;) {
      auto q = divide_exact(rest, g, p);
      if (!q) break;
      rest = *q;
      ++m;
    }
    if (m == 0) throw std::logic_error("uni::factor: divisor lost");
    res.factors.push_back({g, m});
  }
  if (deg(rest) != 0) throw std::logic_error("uni::factor: nontrivial cofactor");
  return res;
}

} // namespace iwa::uni
