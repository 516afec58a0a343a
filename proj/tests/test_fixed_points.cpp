#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "ssd/fixed_points.hpp"
#include "ssd/orbit.hpp"

using ssd::Bigint;

TEST_CASE("divisor_count: frozen and reference") {
  CHECK(ssd::divisor_count(1) == 1);
  CHECK(ssd::divisor_count(2) == 2);
  CHECK(ssd::divisor_count(145) == 4);
  CHECK(ssd::divisor_count(50) == 6);
  for (std::uint64_t m = 1; m <= 2000; ++m)
    CHECK(ssd::divisor_count(m) == oracle::divisor_count_slow(m));
  // 1 + 2030^2, beyond the small exhaustive range
  CHECK(ssd::divisor_count(1 + Bigint(2030) * 2030) ==
        oracle::divisor_count_slow(1 + 2030ull * 2030));
  CHECK_THROWS_AS(ssd::divisor_count(0), std::domain_error);
}

TEST_CASE("two-square representations: frozen") {
  auto reps = ssd::two_square_representations(145, 12);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == ssd::TwoSquareRep{-12, 1});
  CHECK(reps[1] == ssd::TwoSquareRep{-8, 9});
  CHECK(reps[2] == ssd::TwoSquareRep{8, 9});

  reps = ssd::two_square_representations(5, 2);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == ssd::TwoSquareRep{-2, 1});

  // see notes: (±5,5) and (±1,7) all satisfy the digit ranges for base 7
  reps = ssd::two_square_representations(50, 7);
  REQUIRE(reps.size() == 5);
  CHECK(reps[0] == ssd::TwoSquareRep{-7, 1});
  CHECK(reps[1] == ssd::TwoSquareRep{-5, 5});
  CHECK(reps[2] == ssd::TwoSquareRep{-1, 7});
  CHECK(reps[3] == ssd::TwoSquareRep{1, 7});
  CHECK(reps[4] == ssd::TwoSquareRep{5, 5});

  CHECK_THROWS_AS(ssd::two_square_representations(146, 12), std::domain_error);
  CHECK_THROWS_AS(ssd::two_square_representations(5, 1), std::domain_error);
}

TEST_CASE("two-square representations match the reference scan") {
  for (std::uint64_t b = 2; b <= 60; ++b) {
    auto got = ssd::two_square_representations(1 + Bigint(b) * b, b);
    auto expect = oracle::two_square_scan(1 + b * b, b);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
      CHECK(got[i].u == expect[i].first);
      CHECK(got[i].v == expect[i].second);
    }
  }
}

TEST_CASE("structural fixed points: frozen bases") {
  auto points = ssd::fixed_points_structural(12);
  REQUIRE(points.size() == 3);
  CHECK(points[0].value() == 1);
  CHECK(points[1].value() == 29);
  CHECK(points[2].value() == 125);
  CHECK(points[1].notation() == "2.5|_12");

  points = ssd::fixed_points_structural(2);
  REQUIRE(points.size() == 1);
  CHECK(points[0].value() == 1);

  points = ssd::fixed_points_structural(7);
  REQUIRE(points.size() == 5);
  CHECK(points[0].value() == 1);
  CHECK(points[1].value() == 10);
  CHECK(points[2].value() == 25);
  CHECK(points[3].value() == 32);
  CHECK(points[4].value() == 45);
}

TEST_CASE("structural fixed points: count formula and brute force, b <= 300") {
  for (std::uint64_t b = 2; b <= 300; ++b) {
    auto structural = ssd::fixed_points_structural(b);
    auto brute = ssd::enumerate_fixed_points_bruteforce(b);
    REQUIRE(structural.size() == brute.size());
    CHECK(structural.size() == ssd::divisor_count(1 + Bigint(b) * b) - 1);
    for (std::size_t i = 0; i < brute.size(); ++i)
      CHECK(structural[i].value() == brute[i]);
    CHECK(structural.front().value() == 1);  // trivial point always present
  }
}
