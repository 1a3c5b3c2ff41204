#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iwa/structure.hpp"

using namespace iwa;

namespace {

// independent membership oracle: m lies in Delta^q(M) iff the cyclic
// submodule A*m has dimension <= nvars - q, read off the colon ideal (N : m).
// Uses only colon + Krull dimension, no Ext.
bool oracle_in_delta(const ModulePresentation& M, const PolyRow& m, std::uint32_t q) {
  if (q == 0) return true;
  const RingPtr& R = M.ring;
  if (row_in_span(R, m, row_gb(R, M.rels, M.gens))) return true;
  auto colon = groebner_basis(colon_rows_into_ideal(R, M.rels, m, M.gens));
  std::uint32_t dim = dimension_of_quotient(R, colon);
  return dim + q <= R->nvars();
}

PolyRow random_element(const RingPtr& R, std::uint32_t g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dc(0, R->p - 1);
  std::uniform_int_distribution<std::uint32_t> de(0, 2);
  PolyRow row(g, GradedPoly::zero(R));
  for (auto& entry : row)
    for (int t = 0; t < 2; ++t) {
      Expo e(R->nvars(), 0);
      for (auto& x : e) x = de(rng);
      entry += GradedPoly::monomial(R, std::move(e), dc(rng));
    }
  return row;
}

ModulePresentation cyclic(const RingPtr& R, const std::vector<GradedPoly>& gens) {
  PolyMatrix rows;
  for (const auto& g : gens) rows.push_back({g});
  return ModulePresentation(R, 1, rows);
}

} // namespace

TEST_CASE("pseudo-nullity and purity on cyclic modules") {
  auto R = make_ring(5, {"X", "Y"});
  auto X = GradedPoly::variable(R, 0);
  auto Y = GradedPoly::variable(R, 1);

  auto hyper = cyclic(R, {X});          // A/(X): grade 1
  auto point = cyclic(R, {X, Y});       // A/(X,Y): grade 2
  auto zero = cyclic(R, {GradedPoly::constant(R, 1)});

  CHECK_FALSE(is_pseudo_null(hyper));
  CHECK(is_pseudo_null(point));
  CHECK(is_pseudo_null(zero));

  CHECK(is_pure(hyper));
  CHECK(is_pure(point));
  CHECK(is_pure(zero));
  CHECK(is_pure(cyclic(R, {X * X * Y}))); // associated primes (X),(Y), all height 1

  // A/(X^2, XY): the class of X is killed by (X,Y), an embedded component
  auto embedded = cyclic(R, {X * X, X * Y});
  CHECK_FALSE(is_pure(embedded));
  auto pn = pseudo_null_submodule(embedded);
  CHECK_FALSE(is_zero_module(pn));
  auto annpn = annihilator(pn);
  CHECK(ideal_equal(R, annpn, groebner_basis({X, Y})));
  // and the torsion submodule is everything
  PolyMatrix id1 = {{GradedPoly::constant(R, 1)}};
  CHECK(rows_equal_span(R, delta_submodule(embedded, 1), id1, 1));
}

TEST_CASE("dimension filtration of planted direct sums") {
  auto R = make_ring(3, {"X", "Y"});
  auto X = GradedPoly::variable(R, 0);
  auto Y = GradedPoly::variable(R, 1);
  auto z = GradedPoly::zero(R);

  // M = A/(X) + A/(X,Y) in two coordinates
  ModulePresentation M(R, 2, {{X, z}, {z, X}, {z, Y}});
  CHECK_FALSE(is_pseudo_null(M));
  CHECK_FALSE(is_pure(M));
  CHECK(is_torsion(M));

  DimensionFiltration F = dimension_filtration(M);
  REQUIRE(F.delta.size() == 3);
  // Delta^1 = M, Delta^2 = the second summand
  PolyMatrix id = {{GradedPoly::constant(R, 1), z}, {z, GradedPoly::constant(R, 1)}};
  CHECK(rows_equal_span(R, F.delta[0], id, 2));
  CHECK(rows_equal_span(R, F.delta[1], id, 2));
  PolyMatrix expected2 = M.rels;
  expected2.push_back({z, GradedPoly::constant(R, 1)});
  CHECK(rows_equal_span(R, F.delta[2], expected2, 2));

  auto pn = pseudo_null_submodule(M);
  CHECK(ideal_equal(R, annihilator(pn), groebner_basis({X, Y})));
  auto tor = torsion_submodule(M);
  CHECK(ideal_equal(R, annihilator(tor), groebner_basis({X}))); // ann(M) itself

  // with a free summand: A + A/(X)
  ModulePresentation N(R, 2, {{z, X}});
  CHECK_FALSE(is_torsion(N));
  CHECK_FALSE(is_pure(N)); // grade 0 but Delta^1 != 0
  auto tn = torsion_submodule(N);
  CHECK(ideal_equal(R, annihilator(tn), groebner_basis({X})));
  CHECK(rows_equal_span(R, delta_submodule(N, 2), N.rels, 2)); // no pseudo-null part
}

TEST_CASE("filtration against the colon-dimension oracle") {
  std::mt19937_64 rng(424242u);
  for (std::uint32_t p : {3u, 5u}) {
    auto R = make_ring(p, {"X", "Y"});
    for (int trial = 0; trial < 8; ++trial) {
      std::uint32_t g = 2;
      PolyMatrix rels;
      int nrows = 2 + static_cast<int>(rng() % 2);
      for (int i = 0; i < nrows; ++i) rels.push_back(random_element(R, g, rng));
      ModulePresentation M(R, g, rels);
      if (is_zero_module(M)) continue;

      DimensionFiltration F = dimension_filtration(M);
      // chain property and relation containment
      for (std::uint32_t q = 0; q + 1 <= 2; ++q)
        CHECK(rows_subset(R, F.delta[q + 1], F.delta[q], g));
      for (std::uint32_t q = 0; q <= 2; ++q)
        CHECK(rows_subset(R, M.rels, F.delta[q], g));

      for (std::uint32_t q = 1; q <= 2; ++q) {
        // soundness: every generator of Delta^q passes the oracle
        for (const auto& row : F.delta[q]) CHECK(oracle_in_delta(M, row, q));
        // completeness on random elements
        PolyMatrix gb = row_gb(R, F.delta[q], g);
        for (int s = 0; s < 6; ++s) {
          PolyRow m = random_element(R, g, rng);
          CHECK(oracle_in_delta(M, m, q) == row_in_span(R, m, gb));
        }
      }
    }
  }
}

TEST_CASE("height-one support") {
  auto R = make_ring(5, {"X", "Y"});
  auto X = GradedPoly::variable(R, 0);
  auto Y = GradedPoly::variable(R, 1);
  auto z = GradedPoly::zero(R);

  auto w1 = height_one_support(cyclic(R, {X}));
  REQUIRE(w1.size() == 1);
  CHECK(w1[0] == X);

  CHECK(height_one_support(cyclic(R, {X, Y})).empty()); // pseudo-null
  CHECK(height_one_support(cyclic(R, {GradedPoly::constant(R, 1)})).empty());

  auto w2 = height_one_support(cyclic(R, {X * X * Y * (X + Y)}));
  REQUIRE(w2.size() == 3);
  CHECK(w2[0] == Y); // sorted by the deterministic polynomial order
  CHECK(w2[1] == X);
  CHECK(w2[2] == X + Y);

  // mixed: A/(X) + A/(X,Y): the pseudo-null summand is invisible
  ModulePresentation M(R, 2, {{X, z}, {z, X}, {z, Y}});
  auto w3 = height_one_support(M);
  REQUIRE(w3.size() == 1);
  CHECK(w3[0] == X);

  // positive rank is rejected
  ModulePresentation N(R, 2, {{z, X}});
  CHECK_THROWS_AS(height_one_support(N), std::invalid_argument);

  // non-principal mixed annihilator: A/(X^2) + A/(Y) supported on X and Y
  ModulePresentation S(R, 2, {{X * X, z}, {z, Y}});
  auto w4 = height_one_support(S);
  REQUIRE(w4.size() == 2);
  CHECK(w4[0] == Y);
  CHECK(w4[1] == X);
}

TEST_CASE("three-variable filtration") {
  auto R = make_ring(3, {"X", "Y", "Z"});
  auto X = GradedPoly::variable(R, 0);
  auto Y = GradedPoly::variable(R, 1);
  auto Z = GradedPoly::variable(R, 2);
  auto z = GradedPoly::zero(R);

  // A/(X) + A/(X,Y,Z)
  ModulePresentation M(R, 2, {{X, z}, {z, X}, {z, Y}, {z, Z}});
  DimensionFiltration F = dimension_filtration(M);
  REQUIRE(F.delta.size() == 4);
  PolyMatrix id = {{GradedPoly::constant(R, 1), z}, {z, GradedPoly::constant(R, 1)}};
  CHECK(rows_equal_span(R, F.delta[1], id, 2));
  CHECK(rows_equal_span(R, F.delta[2], F.delta[3], 2)); // both = second summand
  PolyMatrix expected = M.rels;
  expected.push_back({z, GradedPoly::constant(R, 1)});
  CHECK(rows_equal_span(R, F.delta[2], expected, 2));
  CHECK_FALSE(is_pure(M));
  CHECK(is_pure(cyclic(R, {X, Y, Z}))); // finite length, grade 3
}
