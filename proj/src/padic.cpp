#include "iwa/padic.hpp"

#include <algorithm>
#include <sstream>

namespace iwa {

namespace {

bool small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// largest exponent a with p^a <= 2^62, so products of residues fit __int128
std::uint32_t max_aprec(std::uint32_t p) {
  std::uint32_t a = 0;
  unsigned __int128 acc = 1;
  const unsigned __int128 cap = (static_cast<unsigned __int128>(1) << 62);
  while (acc * p <= cap) {
    acc *= p;
    ++a;
  }
  return a;
}

} // namespace

std::uint64_t padic_modulus(std::uint32_t p, std::uint32_t a) {
  if (!small_prime(p)) throw std::invalid_argument("padic: p must be a (small) prime");
  if (a == 0) throw std::invalid_argument("padic: precision exponent must be positive");
  if (a > max_aprec(p)) throw std::invalid_argument("padic: p^a exceeds the 64-bit working range");
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < a; ++i) m *= p;
  return m;
}

std::uint32_t padic_val(std::uint64_t x, std::uint32_t p, std::uint32_t a) {
  if (x == 0) return a;
  std::uint32_t v = 0;
  while (v < a && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::uint64_t padic_inv(std::uint64_t x, std::uint32_t p, std::uint32_t a) {
  std::uint64_t m = padic_modulus(p, a);
  x %= m;
  if (x % p == 0) throw std::domain_error("padic_inv: not a unit");
  // inverse mod p by Fermat, then Hensel doubling up to p^a
  std::uint64_t y = 1, base = x % p, e = p - 2;
  while (e) {
    if (e & 1) y = (y * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  std::uint32_t prec = 1;
  while (prec < a) {
    // y <- y * (2 - x*y) mod p^{2*prec}
    prec = std::min(2 * prec, a);
    std::uint64_t mm = padic_modulus(p, prec);
    std::uint64_t t = mulmod(x % mm, y % mm, mm);
    t = (2 + mm - t) % mm;
    y = mulmod(y % mm, t, mm);
  }
  return y % m;
}

PadicSeries::PadicSeries(std::uint32_t p, std::uint32_t aprec, std::uint32_t bprec)
    : p_(p), a_(aprec), b_(bprec) {
  pmod_ = padic_modulus(p, aprec);
  if (bprec == 0) throw std::invalid_argument("PadicSeries: T-precision must be positive");
  c_.assign(b_, 0);
}

PadicSeries PadicSeries::from_coeffs(std::uint32_t p, std::uint32_t aprec, std::uint32_t bprec,
                                     const std::vector<std::int64_t>& coeffs) {
  PadicSeries f(p, aprec, bprec);
  if (coeffs.size() > bprec)
    throw std::invalid_argument("PadicSeries: more coefficients than the T-window holds");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t m = static_cast<std::int64_t>(f.pmod_);
    std::int64_t r = coeffs[i] % m;
    if (r < 0) r += m;
    f.c_[i] = static_cast<std::uint64_t>(r);
  }
  return f;
}

std::uint64_t PadicSeries::coeff(std::uint32_t i) const {
  if (i >= b_) throw std::out_of_range("PadicSeries::coeff: index beyond T-precision");
  return c_[i];
}

void PadicSeries::set_coeff(std::uint32_t i, std::uint64_t v) {
  if (i >= b_) throw std::out_of_range("PadicSeries::set_coeff: index beyond T-precision");
  c_[i] = v % pmod_;
}

bool PadicSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint64_t x) { return x == 0; });
}

void PadicSeries::check_compatible(const PadicSeries& o) const {
  if (p_ != o.p_) throw std::invalid_argument("PadicSeries: mixed primes");
}

PadicSeries PadicSeries::operator+(const PadicSeries& o) const {
  check_compatible(o);
  PadicSeries r(p_, std::min(a_, o.a_), std::min(b_, o.b_));
  for (std::uint32_t i = 0; i < r.b_; ++i) r.c_[i] = (c_[i] % r.pmod_ + o.c_[i] % r.pmod_) % r.pmod_;
  return r;
}

PadicSeries PadicSeries::operator-(const PadicSeries& o) const {
  check_compatible(o);
  PadicSeries r(p_, std::min(a_, o.a_), std::min(b_, o.b_));
  for (std::uint32_t i = 0; i < r.b_; ++i)
    r.c_[i] = (c_[i] % r.pmod_ + r.pmod_ - o.c_[i] % r.pmod_) % r.pmod_;
  return r;
}

PadicSeries PadicSeries::operator*(const PadicSeries& o) const {
  check_compatible(o);
  // error terms inside the common T-window: O(p^{a1})*g, f*O(p^{a2}) and
  // their product, so the result is known mod p^{a1+vp(g)}, p^{a2+vp(f)},
  // p^{a1+a2}, whichever is least (capped by the working range).
  std::uint32_t vf = vp_content().value_or(a_);
  std::uint32_t vg = o.vp_content().value_or(o.a_);
  std::uint32_t aa = std::min({a_ + vg, o.a_ + vf, a_ + o.a_, max_aprec(p_)});
  PadicSeries r(p_, aa, std::min(b_, o.b_));
  for (std::uint32_t i = 0; i < r.b_; ++i) {
    unsigned __int128 acc = 0;
    for (std::uint32_t j = 0; j <= i; ++j) {
      acc += static_cast<unsigned __int128>(c_[j] % r.pmod_) * (o.c_[i - j] % r.pmod_);
      acc %= r.pmod_;
    }
    r.c_[i] = static_cast<std::uint64_t>(acc);
  }
  return r;
}

PadicSeries PadicSeries::scaled(std::int64_t n) const {
  if (n == 0) {
    PadicSeries r(p_, a_, b_);
    return r;
  }
  std::uint64_t mag = static_cast<std::uint64_t>(n < 0 ? -n : n);
  std::uint32_t vn = 0;
  for (std::uint64_t t = mag; t % p_ == 0 && vn < max_aprec(p_); t /= p_) ++vn;
  std::uint32_t aa = std::min(a_ + vn, max_aprec(p_));
  PadicSeries r(p_, aa, b_);
  std::uint64_t nm = mag % r.pmod_;
  if (n < 0) nm = (r.pmod_ - nm) % r.pmod_;
  for (std::uint32_t i = 0; i < b_; ++i) r.c_[i] = mulmod(c_[i], nm, r.pmod_);
  return r;
}

PadicSeries PadicSeries::with_bprec(std::uint32_t b) const {
  // extension pads with zeros: only sound when the caller knows the tail
  // vanishes exactly (polynomial data)
  PadicSeries r(p_, a_, b);
  for (std::uint32_t i = 0; i < std::min(b, b_); ++i) r.c_[i] = c_[i];
  return r;
}

PadicSeries PadicSeries::with_aprec(std::uint32_t a) const {
  if (a > a_) throw std::invalid_argument("PadicSeries: cannot raise p-adic precision");
  PadicSeries r(p_, a, b_);
  for (std::uint32_t i = 0; i < b_; ++i) r.c_[i] = c_[i] % r.pmod_;
  return r;
}

std::optional<std::uint32_t> PadicSeries::vp_content() const {
  std::uint32_t best = a_;
  for (std::uint32_t i = 0; i < b_; ++i) best = std::min(best, padic_val(c_[i], p_, a_));
  if (best >= a_) return std::nullopt;
  return best;
}

std::optional<std::uint32_t> PadicSeries::ordT() const {
  for (std::uint32_t i = 0; i < b_; ++i)
    if (c_[i] != 0) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> PadicSeries::val() const {
  std::uint32_t cap = std::min(a_, b_);
  std::uint32_t best = cap;
  for (std::uint32_t i = 0; i < b_ && i < best; ++i)
    best = std::min(best, padic_val(c_[i], p_, a_) + i);
  if (best >= cap) return std::nullopt;
  return best;
}

PadicSeries PadicSeries::div_by_p(std::uint32_t k) const {
  if (k == 0) return *this;
  if (k >= a_) throw PrecisionError("div_by_p: no p-adic precision would remain");
  std::uint64_t pk = padic_modulus(p_, k);
  PadicSeries r(p_, a_ - k, b_);
  for (std::uint32_t i = 0; i < b_; ++i) {
    if (c_[i] % pk != 0) throw std::domain_error("div_by_p: coefficient not divisible by p^k");
    r.c_[i] = (c_[i] / pk) % r.pmod_;
  }
  return r;
}

PadicSeries PadicSeries::inverse() const {
  if (c_[0] % p_ == 0) throw std::domain_error("PadicSeries::inverse: constant term is not a unit");
  PadicSeries r(p_, a_, b_);
  std::uint64_t u = padic_inv(c_[0], p_, a_);
  r.c_[0] = u;
  for (std::uint32_t n = 1; n < b_; ++n) {
    unsigned __int128 acc = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
      acc += static_cast<unsigned __int128>(c_[i]) * r.c_[n - i];
      acc %= pmod_;
    }
    std::uint64_t s = static_cast<std::uint64_t>(acc);
    r.c_[n] = mulmod((pmod_ - s) % pmod_, u, pmod_);
  }
  return r;
}

std::vector<std::uint32_t> PadicSeries::reduce_mod_p() const {
  std::vector<std::uint32_t> out(b_);
  for (std::uint32_t i = 0; i < b_; ++i) out[i] = static_cast<std::uint32_t>(c_[i] % p_);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string PadicSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < b_; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  if (!first) os << " + ";
  os << "O(" << p_ << "^" << a_ << ", T^" << b_ << ")";
  return os.str();
}

std::pair<PadicSeries, PadicSeries> weierstrass_divide(const PadicSeries& g,
                                                       const PadicSeries& f) {
  if (g.p() != f.p()) throw std::invalid_argument("weierstrass_divide: mixed primes");
  std::uint32_t p = f.p();
  std::uint32_t a = std::min(g.aprec(), f.aprec());
  std::uint32_t b = std::min(g.bprec(), f.bprec());
  PadicSeries F = f.with_aprec(std::min(a, f.aprec())).with_bprec(b);
  PadicSeries G = g.with_aprec(std::min(a, g.aprec())).with_bprec(b);

  // lambda = first unit coefficient of f
  std::uint32_t lambda = b;
  for (std::uint32_t i = 0; i < b; ++i)
    if (F.coeff(i) % p != 0) {
      lambda = i;
      break;
    }
  if (lambda >= b)
    throw PrecisionError("weierstrass_divide: divisor has no unit coefficient in the T-window");

  // f = A + T^lambda * V with A = low part (divisible by p), V a unit
  PadicSeries A(p, a, b), V(p, a, b);
  for (std::uint32_t i = 0; i < lambda; ++i) A.set_coeff(i, F.coeff(i));
  for (std::uint32_t i = lambda; i < b; ++i) V.set_coeff(i - lambda, F.coeff(i));
  PadicSeries Vinv = V.inverse();

  PadicSeries q(p, a, b);
  PadicSeries e = G;
  // each pass multiplies the residual by A (divisible by p): at most a rounds
  for (std::uint32_t round = 0; round <= a + 1; ++round) {
    PadicSeries high(p, a, b);
    bool any = false;
    for (std::uint32_t i = lambda; i < b; ++i) {
      if (e.coeff(i) != 0) any = true;
      high.set_coeff(i - lambda, e.coeff(i));
    }
    if (!any) break;
    PadicSeries dq = high * Vinv;
    dq = dq.with_aprec(a);
    q = q + dq;
    PadicSeries low(p, a, b);
    for (std::uint32_t i = 0; i < lambda; ++i) low.set_coeff(i, e.coeff(i));
    e = low - (dq * A).with_aprec(a);
  }
  for (std::uint32_t i = lambda; i < b; ++i)
    if (e.coeff(i) != 0) throw std::logic_error("weierstrass_divide: contraction failed to settle");
  return {q, e};
}

WeierstrassData weierstrass_prepare(const PadicSeries& f) {
  auto mu = f.vp_content();
  if (!mu) throw PrecisionError("weierstrass_prepare: series vanishes at working precision");
  PadicSeries f1 = f.div_by_p(*mu);
  std::uint32_t a = f1.aprec(), b = f1.bprec(), p = f1.p();

  std::uint32_t lambda = b;
  for (std::uint32_t i = 0; i < b; ++i)
    if (f1.coeff(i) % p != 0) {
      lambda = i;
      break;
    }
  if (lambda >= b)
    throw PrecisionError("weierstrass_prepare: no unit coefficient in the T-window");

  PadicSeries Tl(p, a, b);
  Tl.set_coeff(lambda, 1);
  auto [q, r] = weierstrass_divide(Tl, f1);
  // distinguished part: T^lambda - r; the division theorem forces r = 0 mod p
  std::vector<std::uint64_t> dist(lambda + 1, 0);
  std::uint64_t pm = q.pmod();
  for (std::uint32_t i = 0; i < lambda; ++i) {
    std::uint64_t ri = r.coeff(i);
    if (ri % p != 0) throw std::logic_error("weierstrass_prepare: remainder is not divisible by p");
    dist[i] = (pm - ri) % pm;
  }
  dist[lambda] = 1;
  if (q.coeff(0) % p == 0) throw std::logic_error("weierstrass_prepare: quotient is not a unit");
  WeierstrassData w;
  w.mu = *mu;
  w.lambda = lambda;
  w.dist = std::move(dist);
  w.unit = q.inverse();
  return w;
}

namespace pp {

std::vector<std::uint64_t> trim(std::vector<std::uint64_t> f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a,
                               const std::vector<std::uint64_t>& b, std::uint32_t p,
                               std::uint32_t aprec) {
  std::uint64_t m = padic_modulus(p, aprec);
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] % m == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      unsigned __int128 acc = static_cast<unsigned __int128>(a[i] % m) * (b[j] % m) + r[i + j];
      r[i + j] = static_cast<std::uint64_t>(acc % m);
    }
  }
  return trim(std::move(r));
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> divrem_monic(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, std::uint32_t p,
    std::uint32_t aprec) {
  std::uint64_t m = padic_modulus(p, aprec);
  std::vector<std::uint64_t> bb = trim(b);
  if (bb.empty() || bb.back() % m != 1)
    throw std::invalid_argument("pp::divrem_monic: divisor must be monic");
  std::vector<std::uint64_t> r = trim(a);
  for (auto& x : r) x %= m;
  if (r.size() < bb.size()) return {{}, r};
  std::vector<std::uint64_t> q(r.size() - bb.size() + 1, 0);
  for (std::size_t i = r.size(); i-- >= bb.size();) {
    std::uint64_t c = r[i] % m;
    if (c != 0) {
      std::size_t shift = i - (bb.size() - 1);
      q[shift] = c;
      for (std::size_t j = 0; j < bb.size(); ++j) {
        unsigned __int128 t = static_cast<unsigned __int128>(c) * (bb[j] % m) % m;
        std::uint64_t sub = static_cast<std::uint64_t>(t);
        r[shift + j] = (r[shift + j] % m + m - sub) % m;
      }
    }
    if (i == 0) break;
  }
  return {trim(std::move(q)), trim(std::move(r))};
}

} // namespace pp

LambdaGcd lambda_gcd(const PadicSeries& f, const PadicSeries& g) {
  if (f.p() != g.p()) throw std::invalid_argument("lambda_gcd: mixed primes");
  if (f.is_zero() || g.is_zero())
    throw PrecisionError("lambda_gcd: an argument vanishes at working precision");
  WeierstrassData wf = weierstrass_prepare(f);
  WeierstrassData wg = weierstrass_prepare(g);
  std::uint32_t p = f.p();
  std::uint32_t a = std::min(wf.unit.aprec(), wg.unit.aprec());

  std::vector<std::uint64_t> A = wf.dist, B = wg.dist;
  if (A.size() < B.size()) std::swap(A, B);
  std::uint64_t m = padic_modulus(p, a);
  auto reduce = [&](std::vector<std::uint64_t>& v) {
    for (auto& x : v) x %= m;
    v = pp::trim(std::move(v));
  };
  reduce(A);
  reduce(B);

  while (true) {
    if (B.empty()) throw std::logic_error("lambda_gcd: distinguished part vanished");
    if (B.size() == 1) {
      B = {1};
      break;
    }
    auto [q, r] = pp::divrem_monic(A, B, p, a);
    (void)q;
    if (r.empty()) break;
    // strip the p-content of the remainder: distinguished common divisors of
    // A and p^k * r are exactly the common divisors of A and r / p^k
    std::uint32_t vr = a;
    for (auto x : r) vr = std::min(vr, padic_val(x, p, a));
    if (vr >= a) break; // remainder is 0 within precision
    // A remainder within a few digits of the precision ceiling is
    // indistinguishable from the exact zero of a terminating Euclid step:
    // representative drift in the prepared parts sits a couple of digits
    // below p^a and gets amplified once per division.  Treating it as
    // content would destroy almost the whole precision budget, so instead
    // stop and certify B as a common divisor modulo p^vr.
    if (vr >= a - std::min<std::uint32_t>(4, a / 2)) {
      a = vr;
      m = padic_modulus(p, a);
      reduce(B);
      break;
    }
    if (vr > 0) {
      if (a - vr < 1) throw PrecisionError("lambda_gcd: precision exhausted in remainder chain");
      std::uint64_t pk = padic_modulus(p, vr);
      for (auto& x : r) x /= pk;
      a -= vr;
      m = padic_modulus(p, a);
      reduce(A);
      reduce(B);
      reduce(r);
    }
    // Remainder need not be distinguished; take its distinguished part.
    // It is a true polynomial, so give it the widest window the inputs
    // support: preparation pins the distinguished part down only to about
    // p^((b - lambda) s / lambda) when the window is T^b.
    std::uint32_t bwide = std::max<std::uint32_t>(static_cast<std::uint32_t>(r.size() + 1),
                                                  std::max(f.bprec(), g.bprec()));
    PadicSeries rs(p, a, bwide);
    for (std::size_t i = 0; i < r.size(); ++i) rs.set_coeff(static_cast<std::uint32_t>(i), r[i]);
    WeierstrassData wr = weierstrass_prepare(rs);
    if (wr.mu > 0) {
      if (a <= wr.mu) throw PrecisionError("lambda_gcd: precision exhausted in remainder chain");
      a -= wr.mu;
      m = padic_modulus(p, a);
    }
    A = B;
    B = wr.dist;
    reduce(A);
    reduce(B);
    if (B.size() > A.size()) std::swap(A, B);
  }

  LambdaGcd out;
  out.mu = std::min(wf.mu, wg.mu);
  out.dist = B;
  out.aprec = a;
  return out;
}

} // namespace iwa
