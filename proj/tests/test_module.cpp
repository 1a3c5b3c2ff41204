#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iwa/module.hpp"

using namespace iwa;

namespace {
GradedPoly P(const RingPtr& R, const std::string& s) { return parse_poly(R, s); }
} // namespace

TEST_CASE("matrix rank over the fraction field") {
  auto R = make_ring(5, {"X", "Y"});
  CHECK(matrix_rank(R, {{P(R, "X"), P(R, "0")}, {P(R, "0"), P(R, "X^2")}}, 2) == 2);
  // second row is Y times the first
  CHECK(matrix_rank(R, {{P(R, "X"), P(R, "Y")}, {P(R, "X*Y"), P(R, "Y^2")}}, 2) == 1);
  CHECK(matrix_rank(R, {}, 3) == 0);
  CHECK(matrix_rank(R, {{P(R, "0"), P(R, "0")}}, 2) == 0);
  // 3x3 with polynomial entries, determinant (X-Y)*stuff nonzero
  PolyMatrix m = {
      {P(R, "X"), P(R, "Y"), P(R, "1")},
      {P(R, "Y"), P(R, "X"), P(R, "1")},
      {P(R, "1"), P(R, "1"), P(R, "1")},
  };
  CHECK(matrix_rank(R, m, 3) == 3);
}

TEST_CASE("Koszul complex of the irrelevant ideal") {
  auto R = make_ring(5, {"X", "Y"});
  ModulePresentation M(R, 1, {{P(R, "X")}, {P(R, "Y")}});
  FreeResolution res = free_resolution(M);
  REQUIRE(res.ranks == std::vector<std::uint32_t>{1, 2, 1});
  CHECK(res.length() == 2);
  // grade picture of A/(X,Y): Ext^0 = Ext^1 = 0, Ext^2 != 0
  CHECK(ext_is_zero(M, 0, res));
  CHECK(ext_is_zero(M, 1, res));
  CHECK_FALSE(ext_is_zero(M, 2, res));
  auto j = ext_grade(M);
  REQUIRE(j.has_value());
  CHECK(*j == 2);
  // Ext^2(A/(X,Y), A) is again a cyclic module killed exactly by (X,Y)
  ModulePresentation E = ext_module(M, 2, res);
  CHECK_FALSE(is_zero_module(E));
  CHECK(ideal_equal(R, annihilator(E), {P(R, "X"), P(R, "Y")}));
}

TEST_CASE("hypersurface modules have grade one") {
  auto R = make_ring(5, {"X", "Y"});
  for (const char* f : {"X", "X^2", "X*Y", "X^2 - Y^2"}) {
    ModulePresentation M(R, 1, {{P(R, f)}});
    auto j = ext_grade(M);
    REQUIRE(j.has_value());
    CHECK(*j == 1);
    CHECK(krull_dimension(M) == 1);
    CHECK(is_torsion(M));
  }
}

TEST_CASE("free and zero modules") {
  auto R = make_ring(5, {"X", "Y"});
  ModulePresentation F(R, 2, {});
  CHECK_FALSE(is_zero_module(F));
  auto j = ext_grade(F);
  REQUIRE(j.has_value());
  CHECK(*j == 0);
  CHECK(free_resolution(F).length() == 0);
  CHECK(annihilator(F).empty()); // zero ideal
  CHECK(krull_dimension(F) == 2);
  CHECK(generic_rank(F) == 2);
  CHECK_FALSE(is_torsion(F));

  ModulePresentation Z(R, 1, {{P(R, "1")}});
  CHECK(is_zero_module(Z));
  CHECK_FALSE(ext_grade(Z).has_value()); // j(0) = +infinity
  CHECK(ideal_member(GradedPoly::constant(R, 1), annihilator(Z)));
  CHECK_THROWS(krull_dimension(Z));
}

TEST_CASE("annihilator of a diagonal quotient") {
  auto R = make_ring(5, {"X", "Y"});
  ModulePresentation M(R, 2, {{P(R, "X"), P(R, "0")}, {P(R, "0"), P(R, "Y")}});
  CHECK(ideal_equal(R, annihilator(M), {P(R, "X*Y")}));
  CHECK(krull_dimension(M) == 1);
  CHECK(generic_rank(M) == 0);
}

TEST_CASE("resolution differentials compose to zero and resolve the module") {
  auto R = make_ring(5, {"X", "Y"});
  // mixed, non-cyclic example
  ModulePresentation M(R, 2, {
      {P(R, "X^2"), P(R, "Y")},
      {P(R, "X*Y"), P(R, "X")},
      {P(R, "Y^2"), P(R, "0")},
  });
  FreeResolution res = free_resolution(M);
  REQUIRE(res.length() >= 1);
  // d_1 rows generate the same submodule as the original relations
  CHECK(rows_equal_span(R, res.diffs[0], M.rels, M.gens));
  // rank bookkeeping: length <= nvars + 1 (Hilbert bound after pruning)
  CHECK(res.length() <= R->nvars() + 1);
  // exactness spot check at F_1: syzygies of d_1 rows equal the row span of d_2
  if (res.length() >= 2) {
    PolyMatrix syz = syzygies_of(R, res.diffs[0], res.ranks[0]);
    CHECK(rows_equal_span(R, syz, res.diffs[1], res.ranks[1]));
  }
}

TEST_CASE("grade of a pseudo-null-type quotient in three variables") {
  auto R = make_ring(3, {"X", "Y", "Z"});
  // A/(X, Y) has grade 2 in a 3-dimensional ring, dimension 1
  ModulePresentation M(R, 1, {{P(R, "X")}, {P(R, "Y")}});
  auto j = ext_grade(M);
  REQUIRE(j.has_value());
  CHECK(*j == 2);
  CHECK(krull_dimension(M) == 1);
  // full irrelevant ideal: grade 3
  ModulePresentation N(R, 1, {{P(R, "X")}, {P(R, "Y")}, {P(R, "Z")}});
  auto j2 = ext_grade(N);
  REQUIRE(j2.has_value());
  CHECK(*j2 == 3);
  CHECK(free_resolution(N).ranks == std::vector<std::uint32_t>{1, 3, 3, 1});
}

TEST_CASE("subquotient presentation") {
  auto R = make_ring(5, {"X", "Y"});
  // inside M = A/(X^2): the submodule X*M is isomorphic to A/(X)
  PolyMatrix N = {{P(R, "X^2")}};
  ModulePresentation S = subquotient(R, {{P(R, "X")}}, N, 1);
  CHECK_FALSE(is_zero_module(S));
  CHECK(ideal_equal(R, annihilator(S), {P(R, "X")}));
  // quotient M/(X*M) is A/(X)
  ModulePresentation M(R, 1, N);
  ModulePresentation Q = quotient_by(M, {{P(R, "X")}});
  CHECK(ideal_equal(R, annihilator(Q), {P(R, "X")}));
}

TEST_CASE("Ext module of a hypersurface is the expected cyclic module") {
  auto R = make_ring(5, {"X", "Y"});
  ModulePresentation M(R, 1, {{P(R, "X*Y")}});
  FreeResolution res = free_resolution(M);
  ModulePresentation E = ext_module(M, 1, res);
  // Ext^1(A/f, A) = A/f
  CHECK_FALSE(is_zero_module(E));
  CHECK(ideal_equal(R, annihilator(E), {P(R, "X*Y")}));
  CHECK(ext_is_zero(M, 0, res));
  CHECK(ext_is_zero(M, 2, res));
}

TEST_CASE("homogeneity bookkeeping with shifts") {
  auto R = make_ring(5, {"X", "Y"});
  ModulePresentation M(R, 2, {{P(R, "X"), P(R, "1")}}, {0, 1});
  CHECK(M.is_homogeneous()); // deg X + 0 == deg 1 + 1
  ModulePresentation N(R, 2, {{P(R, "X"), P(R, "1")}}, {0, 0});
  CHECK_FALSE(N.is_homogeneous());
  ModulePresentation W(R, 1, {{P(R, "X^2 + Y")}});
  CHECK_FALSE(W.is_homogeneous());
}
