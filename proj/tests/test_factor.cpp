#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iwa/factor.hpp"

using namespace iwa;
using uni::UPoly;

namespace {

// oracle: exhaustive trial division by monic polynomials of degree <= bound
bool uni_has_proper_divisor(const UPoly& f, std::uint32_t p) {
  int half = uni::deg(f) / 2;
  for (int d = 1; d <= half; ++d) {
    // enumerate all monic degree-d candidates
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      UPoly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (uni::divide_exact(f, g, p)) return true;
    }
  }
  return false;
}

UPoly uni_multiply_back(const uni::UniFactors& r, std::uint32_t p) {
  UPoly acc{r.unit};
  for (const auto& [g, m] : r.factors)
    for (std::uint32_t i = 0; i < m; ++i) acc = uni::mul(acc, g, p);
  return acc;
}

GradedPoly multiply_back(const RingPtr& R, const FactorResult& r) {
  GradedPoly acc = GradedPoly::constant(R, r.unit);
  for (const auto& [g, m] : r.factors)
    for (std::uint32_t i = 0; i < m; ++i) acc *= g;
  if (r.residual) acc *= *r.residual;
  return acc;
}

// all monomials of weighted degree <= cap
std::vector<Expo> monos_up_to(const RingSpec& R, std::uint64_t cap) {
  std::vector<Expo> out;
  std::vector<Expo> frontier{Expo(R.nvars(), 0)};
  out.push_back(frontier[0]);
  for (std::uint64_t d = 1; d <= cap; ++d) {
    // brute expansion: all vectors with wdeg == d, built from smaller ones
    std::vector<Expo> next;
    for (const auto& e : out) {
      if (wdeg(e, R) + 1 > d) continue;
      for (std::size_t i = 0; i < R.nvars(); ++i) {
        Expo f = e;
        f[i] += 1;
        if (wdeg(f, R) == d) next.push_back(f);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

// oracle: does f have a divisor with 1 <= wdeg <= wdeg(f)/2?  (any proper
// factorization has a piece in that range, since wdeg is multiplicative)
// returns nullopt when enumeration would be too large to run
std::optional<bool> graded_has_small_divisor(const GradedPoly& f) {
  const RingPtr& R = f.ring();
  std::uint64_t cap = f.degree() / 2;
  if (cap == 0) return false;
  auto monos = monos_up_to(*R, cap);
  double cost = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) cost *= R->p;
  if (cost > 300000.0) return std::nullopt;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) count *= R->p;
  for (std::uint64_t code = 1; code < count; ++code) {
    std::uint64_t c = code;
    std::vector<Term> terms;
    for (const auto& e : monos) {
      std::uint32_t co = static_cast<std::uint32_t>(c % R->p);
      c /= R->p;
      if (co) terms.push_back({e, co});
    }
    GradedPoly g(R, std::move(terms));
    if (g.is_constant()) continue;
    if (GradedPoly::divide_exact(f, g)) return true;
  }
  return false;
}

GradedPoly random_poly(const RingPtr& R, std::mt19937_64& rng, std::uint32_t maxdeg,
                       std::size_t nterms) {
  std::uniform_int_distribution<std::uint32_t> dc(0, R->p - 1);
  std::uniform_int_distribution<std::uint32_t> de(0, maxdeg);
  GradedPoly f = GradedPoly::zero(R);
  for (std::size_t t = 0; t < nterms; ++t) {
    Expo e(R->nvars(), 0);
    std::uint32_t budget = maxdeg;
    for (std::size_t i = 0; i < R->nvars(); ++i) {
      e[i] = de(rng) % (budget + 1);
      budget -= e[i];
    }
    f += GradedPoly::monomial(R, std::move(e), dc(rng));
  }
  return f;
}

} // namespace

TEST_CASE("univariate arithmetic") {
  const std::uint32_t p = 5;
  UPoly a{1, 2, 3}; // 3x^2 + 2x + 1
  UPoly b{4, 1};    // x + 4
  auto [q, r] = uni::divrem(a, b, p);
  CHECK(uni::add(uni::mul(q, b, p), r, p) == a);
  CHECK(uni::deg(r) < uni::deg(b));
  // 4x^2+1 = 4(x+4)(x+1) and x^2+3x+2 = (x+1)(x+2) over F_5
  CHECK(uni::gcd({1, 0, 4}, {2, 3, 1}, p) == UPoly{1, 1});

  // gcd oracle: g divides both and is monic
  UPoly f1{1, 0, 4}; // 4x^2+1 = 4(x^2+4) = 4(x-1)(x+1) over F_5
  UPoly f2{4, 0, 1}; // x^2+4 = (x-1)(x+1)
  UPoly g = uni::gcd(f1, f2, p);
  CHECK(g.back() == 1);
  CHECK(uni::divide_exact(f1, g, p));
  CHECK(uni::divide_exact(f2, g, p));
  CHECK(uni::deg(g) == 2);

  CHECK(uni::eval({1, 2, 3}, 2, p) == (1 + 4 + 12) % 5);
  CHECK(uni::is_squarefree({0, 1}, p));        // x
  CHECK_FALSE(uni::is_squarefree({0, 0, 1}, p)); // x^2
}

TEST_CASE("univariate factorization, frozen cases") {
  // x^2 + 1 = (x+1)^2 over F_2
  auto r2 = uni::factor({1, 0, 1}, 2);
  REQUIRE(r2.factors.size() == 1);
  CHECK(r2.factors[0].first == UPoly{1, 1});
  CHECK(r2.factors[0].second == 2);

  // x^2 + 1 irreducible over F_3
  auto r3 = uni::factor({1, 0, 1}, 3);
  REQUIRE(r3.factors.size() == 1);
  CHECK(r3.factors[0].second == 1);

  // x^2 + 1 = (x+2)(x+3) over F_5
  auto r5 = uni::factor({1, 0, 1}, 5);
  REQUIRE(r5.factors.size() == 2);
  CHECK(r5.factors[0].first == UPoly{2, 1});
  CHECK(r5.factors[1].first == UPoly{3, 1});

  // x^4 + x^2 + 1 = (x^2+x+1)^2 over F_2
  auto r4 = uni::factor({1, 0, 1, 0, 1}, 2);
  REQUIRE(r4.factors.size() == 1);
  CHECK(r4.factors[0].first == UPoly{1, 1, 1});
  CHECK(r4.factors[0].second == 2);

  // unit tracking: 3(x+1)(x+2) over F_7
  UPoly f = uni::scale(uni::mul({1, 1}, {2, 1}, 7), 3, 7);
  auto r7 = uni::factor(f, 7);
  CHECK(r7.unit == 3);
  CHECK(uni_multiply_back(r7, 7) == f);
}

TEST_CASE("univariate factorization, randomized against oracles") {
  std::mt19937_64 rng(20240815u);
  struct Cfg {
    std::uint32_t p;
    int maxdeg;
  };
  for (Cfg cfg : {Cfg{2, 12}, Cfg{3, 8}, Cfg{5, 6}, Cfg{7, 6}}) {
    for (int trial = 0; trial < 40; ++trial) {
      UPoly f(cfg.maxdeg + 1, 0);
      for (auto& c : f) c = static_cast<std::uint32_t>(rng() % cfg.p);
      f = uni::trim(std::move(f));
      if (uni::deg(f) < 1) continue;
      auto r = uni::factor(f, cfg.p);
      CHECK(uni_multiply_back(r, cfg.p) == f);
      for (const auto& [g, m] : r.factors) {
        CHECK(g.back() == 1);
        CHECK(m >= 1);
        CHECK_FALSE(uni_has_proper_divisor(g, cfg.p));
      }
      // distinct factors are pairwise coprime
      for (std::size_t i = 0; i < r.factors.size(); ++i)
        for (std::size_t j = i + 1; j < r.factors.size(); ++j)
          CHECK(uni::gcd(r.factors[i].first, r.factors[j].first, cfg.p) == UPoly{1});
    }
  }
}

TEST_CASE("bivariate gcd") {
  auto R = make_ring(5, {"X", "Y"});
  auto X = GradedPoly::variable(R, 0);
  auto Y = GradedPoly::variable(R, 1);

  CHECK(poly_gcd((X + Y) * X, (X + Y) * Y) == X + Y);
  CHECK(poly_gcd(X * X - Y * Y, (X + Y) * (X + Y)) == X + Y);
  CHECK(poly_gcd(X, Y).is_unit());
  CHECK(poly_gcd(GradedPoly::zero(R), X * Y) == X * Y);
  CHECK(poly_gcd(X * Y, GradedPoly::zero(R)) == X * Y);

  // content interaction: gcd(Y*(X^2+X), Y^2*(X+1)) = Y*(X+1) over F_5
  auto one = GradedPoly::constant(R, 1);
  auto g = poly_gcd(Y * (X * X + X), Y * Y * (X + one));
  CHECK(g == Y * (X + one));

  // univariate ring path
  auto R1 = make_ring(5, {"T"});
  auto T = GradedPoly::variable(R1, 0);
  auto one1 = GradedPoly::constant(R1, 1);
  CHECK(poly_gcd(T * T - one1, T - one1) == T - one1);
}

TEST_CASE("bivariate factorization, frozen cases") {
  auto R5 = make_ring(5, {"X", "Y"});
  auto X = GradedPoly::variable(R5, 0);
  auto Y = GradedPoly::variable(R5, 1);

  // X^2 - Y^2 = (X+Y)(X+4Y) over F_5
  auto f = X * X - Y * Y;
  auto r = factor(f);
  CHECK_FALSE(r.residual);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].second == 1);
  CHECK(r.factors[1].second == 1);
  CHECK(multiply_back(R5, r) == f);
  CHECK(is_irreducible(X + Y));
  CHECK_FALSE(is_irreducible(f));

  // X^2 + Y^2 = (X+2Y)(X+3Y) over F_5 but irreducible over F_3
  CHECK_FALSE(is_irreducible(X * X + Y * Y));
  auto R3 = make_ring(3, {"X", "Y"});
  auto X3 = GradedPoly::variable(R3, 0);
  auto Y3 = GradedPoly::variable(R3, 1);
  CHECK(is_irreducible(X3 * X3 + Y3 * Y3));
  CHECK(is_irreducible(X3 * X3 + Y3)); // smooth conic

  // p-th power: X^2 + Y^2 = (X+Y)^2 over F_2
  auto R2 = make_ring(2, {"X", "Y"});
  auto X2 = GradedPoly::variable(R2, 0);
  auto Y2 = GradedPoly::variable(R2, 1);
  auto sq = factor(X2 * X2 + Y2 * Y2);
  CHECK_FALSE(sq.residual);
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].first == X2 + Y2);
  CHECK(sq.factors[0].second == 2);

  // (XY+1)^3 over F_3: both partials vanish, cube root path
  auto one3 = GradedPoly::constant(R3, 1);
  auto base = X3 * Y3 + one3;
  auto cube = factor(base * base * base);
  CHECK_FALSE(cube.residual);
  REQUIRE(cube.factors.size() == 1);
  CHECK(cube.factors[0].first == base);
  CHECK(cube.factors[0].second == 3);

  // mixed contents: X * Y^2 * (X+Y) over F_5
  auto m = factor(X * Y * Y * (X + Y));
  CHECK_FALSE(m.residual);
  REQUIRE(m.factors.size() == 3);
  CHECK(multiply_back(R5, m) == X * Y * Y * (X + Y));

  // unit tracking: 3 * (X+Y)^2 over F_5
  auto u = factor((X + Y) * (X + Y) * GradedPoly::constant(R5, 3));
  CHECK(u.unit == 3);
  REQUIRE(u.factors.size() == 1);
  CHECK(u.factors[0].first == X + Y);
  CHECK(u.factors[0].second == 2);
}

TEST_CASE("factorization respects non-standard weights") {
  auto R = make_ring(3, {"X", "Y"}, {1, 2});
  auto X = GradedPoly::variable(R, 0);
  auto Y = GradedPoly::variable(R, 1);
  // X^4 - Y^2 = (X^2 - Y)(X^2 + Y), homogeneous of weighted degree 4
  auto f = X * X * X * X - Y * Y;
  CHECK(f.is_homogeneous());
  auto r = factor(f);
  CHECK_FALSE(r.residual);
  REQUIRE(r.factors.size() == 2);
  CHECK(multiply_back(R, r) == f);
  for (const auto& [g, m] : r.factors) {
    CHECK(m == 1);
    CHECK(g.is_homogeneous());
  }
}

TEST_CASE("bivariate factorization, randomized against oracles") {
  struct Cfg {
    std::uint32_t p;
    std::uint32_t maxdeg;
    int trials;
  };
  for (Cfg cfg : {Cfg{2, 6, 60}, Cfg{3, 5, 50}, Cfg{5, 4, 40}}) {
    auto R = make_ring(cfg.p, {"X", "Y"});
    std::mt19937_64 rng(1000u + cfg.p);
    for (int trial = 0; trial < cfg.trials; ++trial) {
      GradedPoly f = random_poly(R, rng, cfg.maxdeg, 5);
      if (f.is_zero() || f.is_constant()) continue;
      FactorResult r = factor(f);
      CHECK(multiply_back(R, r) == f);
      for (const auto& [g, m] : r.factors) {
        CHECK(m >= 1);
        CHECK(g.lc() == 1);
        CHECK_FALSE(g.is_constant());
        auto verdict = graded_has_small_divisor(g);
        if (verdict) CHECK_FALSE(*verdict);
      }
      for (std::size_t i = 0; i < r.factors.size(); ++i)
        for (std::size_t j = i + 1; j < r.factors.size(); ++j)
          CHECK(r.factors[i].first != r.factors[j].first);
    }
  }
}

TEST_CASE("products of planted factors over F_2") {
  // adversarial small-field case: build products of known irreducibles and
  // require the exact multiset back
  auto R = make_ring(2, {"X", "Y"});
  auto X = GradedPoly::variable(R, 0);
  auto Y = GradedPoly::variable(R, 1);
  auto one = GradedPoly::constant(R, 1);
  std::vector<GradedPoly> irr = {
      X, Y, X + Y, X + one, Y + one, X + Y + one,
      X * X + X * Y + Y * Y + X + one, // irreducible over F_2 (checked by oracle below)
      X * Y + one,
  };
  for (const auto& g : irr) {
    auto verdict = graded_has_small_divisor(g);
    REQUIRE(verdict.has_value());
    CHECK_FALSE(*verdict);
  }
  std::mt19937_64 rng(77u);
  for (int trial = 0; trial < 30; ++trial) {
    GradedPoly f = one;
    std::vector<std::uint32_t> mult(irr.size(), 0);
    int pieces = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < pieces; ++k) {
      std::size_t i = rng() % irr.size();
      mult[i] += 1;
      f *= irr[i];
    }
    FactorResult r = factor(f);
    CHECK_FALSE(r.residual);
    CHECK(multiply_back(R, r) == f);
    std::uint32_t total = 0;
    for (const auto& [g, m] : r.factors) {
      bool matched = false;
      for (std::size_t i = 0; i < irr.size(); ++i)
        if (irr[i] == g) {
          matched = true;
          CHECK(mult[i] == m);
        }
      CHECK(matched);
      total += m;
    }
    CHECK(total == static_cast<std::uint32_t>(pieces));
  }
}
