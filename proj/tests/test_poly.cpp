#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iwa/poly.hpp"

using namespace iwa;

TEST_CASE("fp basics") {
  CHECK(fp::is_prime(2));
  CHECK(fp::is_prime(3));
  CHECK(fp::is_prime(2147483647u)); // 2^31 - 1
  CHECK_FALSE(fp::is_prime(1));
  CHECK_FALSE(fp::is_prime(91));
  CHECK(fp::reduce(-1, 5) == 4);
  CHECK(fp::reduce(12, 5) == 2);
  CHECK(fp::mul(3, 4, 5) == 2);
  CHECK(fp::pow(2, 100, 5) == 1); // Fermat
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(fp::mul(a, fp::inv(a, 7), 7) == 1);
  CHECK_THROWS_AS(fp::inv(0, 5), std::domain_error);
}

TEST_CASE("ring validation") {
  CHECK_THROWS(make_ring(4, {"X"}, {1}));
  CHECK_THROWS(make_ring(5, {}, {}));
  CHECK_THROWS(make_ring(5, {"X", "X"}, {1, 1}));
  CHECK_THROWS(make_ring(5, {"X", "Y"}, {1, 0}));
  auto R = make_ring(5, {"X", "Y"});
  CHECK(R->weights == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("weighted degrevlex order") {
  auto R = make_ring(5, {"X", "Y"});
  // X^2 > XY > Y^2 > X > Y > 1
  Expo x2{2, 0}, xy{1, 1}, y2{0, 2}, x{1, 0}, y{0, 1}, one{0, 0};
  CHECK(mono_cmp(x2, xy, *R) > 0);
  CHECK(mono_cmp(xy, y2, *R) > 0);
  CHECK(mono_cmp(y2, x, *R) > 0);
  CHECK(mono_cmp(x, y, *R) > 0);
  CHECK(mono_cmp(y, one, *R) > 0);
  CHECK(mono_cmp(xy, xy, *R) == 0);

  // with weights (1,2): wdeg decides first, ties broken as above
  auto W = make_ring(5, {"X", "Y"}, {1, 2});
  CHECK(wdeg(Expo{0, 1}, *W) == 2);
  CHECK(mono_cmp(Expo{0, 1}, Expo{1, 0}, *W) > 0);  // Y > X
  CHECK(mono_cmp(Expo{2, 0}, Expo{0, 1}, *W) > 0);  // X^2 > Y at equal wdeg 2
}

TEST_CASE("weighted monomial counting") {
  auto R = make_ring(5, {"X", "Y"});
  // monomials of weighted degree exactly d in two weight-1 variables
  CHECK(weighted_monomial_count(*R, 0) == 1);
  CHECK(weighted_monomial_count(*R, 1) == 2);
  CHECK(weighted_monomial_count(*R, 2) == 3);
  CHECK(weighted_monomial_count(*R, 3) == 4);

  auto W = make_ring(5, {"X", "Y"}, {1, 2});
  // exact degree 3: X^3, X*Y
  CHECK(weighted_monomial_count(*W, 3) == 2);
  // exact degree 4: X^4, X^2*Y, Y^2
  CHECK(weighted_monomial_count(*W, 4) == 3);
}

TEST_CASE("polynomial arithmetic and printing") {
  auto R = make_ring(5, {"X", "Y"});
  GradedPoly x = GradedPoly::variable(R, 0);
  GradedPoly y = GradedPoly::variable(R, 1);
  GradedPoly f = x * x - y * y;
  CHECK(f.size() == 2);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.str() == "X^2 + 4*Y^2");
  GradedPoly g = x + y;
  GradedPoly h = f + g;
  CHECK_FALSE(h.is_homogeneous());
  CHECK((f - f).is_zero());
  CHECK((g * g).str() == "X^2 + 2*X*Y + Y^2");
  CHECK(GradedPoly::constant(R, 1).is_unit());
  CHECK_FALSE(x.is_unit());
  CHECK(f.lc() == 1);
  CHECK(f.lm() == Expo{2, 0});
}

TEST_CASE("parser round trips") {
  auto R = make_ring(5, {"X", "Y"});
  auto roundtrip = [&](const std::string& s) {
    GradedPoly f = parse_poly(R, s);
    GradedPoly g = parse_poly(R, f.str());
    CHECK(f == g);
    return f;
  };
  CHECK(roundtrip("X^2 + 4*Y^2") == parse_poly(R, "X^2 - Y^2"));
  CHECK(roundtrip("0").is_zero());
  CHECK(roundtrip("3").is_constant());
  CHECK(parse_poly(R, "(X + Y)^2") == parse_poly(R, "X^2 + 2*X*Y + Y^2"));
  CHECK(parse_poly(R, "2*(X - Y) * (X + Y)") == parse_poly(R, "2*X^2 - 2*Y^2"));
  CHECK(parse_poly(R, "7*X") == parse_poly(R, "2*X"));
  CHECK_THROWS(parse_poly(R, "Z"));
  CHECK_THROWS(parse_poly(R, "X +"));
  CHECK_THROWS(parse_poly(R, "X^"));
}

TEST_CASE("exact division") {
  auto R = make_ring(5, {"X", "Y"});
  GradedPoly f = parse_poly(R, "X^2 - Y^2");
  GradedPoly g = parse_poly(R, "X + Y");
  auto q = GradedPoly::divide_exact(f, g);
  REQUIRE(q.has_value());
  CHECK(*q == parse_poly(R, "X - Y"));
  CHECK_FALSE(GradedPoly::divide_exact(f, parse_poly(R, "X + 2*Y")).has_value());
  CHECK_FALSE(GradedPoly::divide_exact(parse_poly(R, "X"), parse_poly(R, "X^2")).has_value());
  // divisor with several terms, quotient with cancellation
  GradedPoly a = parse_poly(R, "X^3 + X^2*Y + X*Y^2 + Y^3");
  auto q2 = GradedPoly::divide_exact(a, parse_poly(R, "X + Y"));
  REQUIRE(q2.has_value());
  CHECK(*q2 == parse_poly(R, "X^2 + Y^2"));
}

TEST_CASE("degree in a single variable") {
  auto R = make_ring(3, {"X", "Y"});
  GradedPoly f = parse_poly(R, "X^2*Y + Y^2");
  CHECK(f.degree_in(0) == 2);
  CHECK(f.degree_in(1) == 2);
  CHECK(GradedPoly::zero(R).degree_in(0) == 0);
}
