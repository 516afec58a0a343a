#include <random>
#include <vector>

#include "doctest.h"
#include "ssd/poly.hpp"

using ssd::Bigint;
using ssd::IntPoly;
using ssd::make_poly;

TEST_CASE("polynomial canonical form") {
  CHECK(make_poly({}).is_zero());
  CHECK(make_poly({0}).is_zero());
  CHECK(make_poly({0, 0, 0}).is_zero());
  CHECK(make_poly({}).degree() == -1);
  CHECK(make_poly({1, 0, 0}) == ssd::poly_constant(1));
  CHECK(make_poly({1, 0, 0}).degree() == 0);
  CHECK(ssd::poly_monomial(2, 1) == make_poly({0, 2}));
  CHECK(ssd::poly_monomial(0, 5).is_zero());
  CHECK(make_poly({7, 0, 3}).coeff(0) == 7);
  CHECK(make_poly({7, 0, 3}).coeff(1) == 0);
  CHECK(make_poly({7, 0, 3}).coeff(2) == 3);
  CHECK(make_poly({7, 0, 3}).coeff(9) == 0);
}

TEST_CASE("polynomial arithmetic: frozen cases") {
  const IntPoly two_x = ssd::poly_monomial(2, 1);
  CHECK(ssd::poly_mul(two_x, two_x) == make_poly({0, 0, 4}));

  const IntPoly q = make_poly({1, 0, 4});  // 4x^2 + 1
  CHECK(ssd::poly_sub(q, q).is_zero());
  CHECK(ssd::poly_add(q, q) == make_poly({2, 0, 8}));
  CHECK(ssd::poly_scale(q, -3) == make_poly({-3, 0, -12}));
  CHECK(ssd::poly_scale(q, 0).is_zero());

  // (x - 1)(x + 1) = x^2 - 1
  CHECK(ssd::poly_mul(make_poly({-1, 1}), make_poly({1, 1})) == make_poly({-1, 0, 1}));
  // leading-coefficient cancellation in subtraction drops the degree
  CHECK(ssd::poly_sub(make_poly({5, 0, 3}), make_poly({0, 0, 3})) == make_poly({5}));
  CHECK(ssd::poly_mul(IntPoly{}, q).is_zero());
}

TEST_CASE("polynomial evaluation") {
  const IntPoly p4 = make_poly({0, 4, 0, 8});  // 8x^3 + 4x
  CHECK(ssd::poly_eval(p4, 1) == 12);
  CHECK(ssd::poly_eval(p4, 2) == 72);
  CHECK(ssd::poly_eval(p4, -2) == -72);
  CHECK(ssd::poly_eval(IntPoly{}, 123) == 0);
  CHECK(ssd::poly_eval(ssd::poly_constant(-7), 123) == -7);
}

TEST_CASE("polynomial printing") {
  CHECK(ssd::poly_to_string(IntPoly{}) == "0");
  CHECK(ssd::poly_to_string(ssd::poly_constant(1)) == "1");
  CHECK(ssd::poly_to_string(ssd::poly_constant(-3)) == "-3");
  CHECK(ssd::poly_to_string(ssd::poly_monomial(2, 1)) == "2x");
  CHECK(ssd::poly_to_string(make_poly({1, 0, 4})) == "4x^2 + 1");
  CHECK(ssd::poly_to_string(make_poly({0, 4, 0, 8})) == "8x^3 + 4x");
  CHECK(ssd::poly_to_string(make_poly({0, -2, 1})) == "x^2 - 2x");
  CHECK(ssd::poly_to_string(make_poly({0, -1})) == "-x");
}

TEST_CASE("ring laws and evaluation homomorphism on random polynomials") {
  std::mt19937_64 rng(20250822);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, 6);

  auto random_poly = [&]() {
    std::vector<Bigint> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (Bigint& v : c) v = coeff(rng);
    return make_poly(std::move(c));
  };

  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(ssd::poly_add(a, b) == ssd::poly_add(b, a));
    CHECK(ssd::poly_mul(a, b) == ssd::poly_mul(b, a));
    CHECK(ssd::poly_add(ssd::poly_add(a, b), c) == ssd::poly_add(a, ssd::poly_add(b, c)));
    CHECK(ssd::poly_mul(ssd::poly_mul(a, b), c) == ssd::poly_mul(a, ssd::poly_mul(b, c)));
    CHECK(ssd::poly_mul(a, ssd::poly_add(b, c)) ==
          ssd::poly_add(ssd::poly_mul(a, b), ssd::poly_mul(a, c)));
    CHECK(ssd::poly_sub(a, b) == ssd::poly_add(a, ssd::poly_scale(b, -1)));

    for (long x : {-2L, 0L, 1L, 3L}) {
      const Bigint expect =
          ssd::poly_eval(a, x) * ssd::poly_eval(b, x) + ssd::poly_eval(c, x);
      CHECK(ssd::poly_eval(ssd::poly_add(ssd::poly_mul(a, b), c), x) == expect);
    }
  }
}
