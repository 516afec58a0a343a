#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "ssd/digits.hpp"
#include "ssd/orbit.hpp"

using ssd::Bigint;

namespace {

std::vector<Bigint> vb(std::initializer_list<long long> xs) {
  return std::vector<Bigint>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("orbit, frozen examples") {
  auto rec = ssd::orbit(5, 12);
  CHECK(rec.tail == vb({5}));
  CHECK(rec.cycle.elements == vb({5, 25}));

  rec = ssd::orbit(89, 144);
  CHECK(rec.tail == vb({89}));
  CHECK(rec.cycle.elements == vb({89, 7921, 3026, 445, 178, 1157}));

  rec = ssd::orbit(1, 10);
  CHECK(rec.tail == vb({1}));
  CHECK(rec.cycle.elements == vb({1}));

  rec = ssd::orbit(7, 10);
  CHECK(rec.tail == vb({7, 49, 97, 130, 10}));
  CHECK(rec.cycle.elements == vb({1}));
}

TEST_CASE("orbit tail/cycle structure") {
  for (std::uint64_t b : {5, 10, 12, 144}) {
    for (std::uint64_t seed : {1ull, 2ull, 7ull, 41ull, 89ull, 1000ull, 31415ull}) {
      auto rec = ssd::orbit(seed, b);
      REQUIRE(!rec.tail.empty());
      REQUIRE(!rec.cycle.elements.empty());
      CHECK(rec.tail.front() == seed);
      // successive tail entries are S-images; last tail entry maps into cycle
      bool seed_on_cycle =
          std::find(rec.cycle.elements.begin(), rec.cycle.elements.end(),
                    Bigint(seed)) != rec.cycle.elements.end();
      if (seed_on_cycle) {
        CHECK(rec.tail == vb({(long long)seed}));
      } else {
        for (std::size_t i = 0; i + 1 < rec.tail.size(); ++i)
          CHECK(ssd::sum_square_digits(rec.tail[i], b) == rec.tail[i + 1]);
        Bigint next = ssd::sum_square_digits(rec.tail.back(), b);
        CHECK(std::find(rec.cycle.elements.begin(), rec.cycle.elements.end(),
                        next) != rec.cycle.elements.end());
        for (const Bigint& t : rec.tail)
          CHECK(std::find(rec.cycle.elements.begin(), rec.cycle.elements.end(),
                          t) == rec.cycle.elements.end());
      }
      // the element list is closed under S in cyclic order
      auto& cyc = rec.cycle.elements;
      for (std::size_t i = 0; i < cyc.size(); ++i)
        CHECK(ssd::sum_square_digits(cyc[i], b) == cyc[(i + 1) % cyc.size()]);
      // standard form: least element first
      CHECK(*std::min_element(cyc.begin(), cyc.end()) == cyc.front());
    }
  }
}

TEST_CASE("orbit matches reference walker") {
  for (std::uint64_t b : {2, 3, 7, 10, 12, 45}) {
    for (std::uint64_t seed = 1; seed <= 2 * b * b - 1; ++seed) {
      auto rec = ssd::orbit(seed, b);
      auto expect = oracle::orbit_u64(seed, b);
      REQUIRE(rec.cycle.elements.size() == expect.cycle.size());
      for (std::size_t i = 0; i < expect.cycle.size(); ++i)
        CHECK(rec.cycle.elements[i] == expect.cycle[i]);
      REQUIRE(rec.tail.size() == expect.tail.size());
      for (std::size_t i = 0; i < expect.tail.size(); ++i)
        CHECK(rec.tail[i] == expect.tail[i]);
    }
  }
}

TEST_CASE("enumerate_cycles, frozen small bases") {
  CHECK(ssd::enumerate_cycles(2).empty());

  auto b3 = ssd::enumerate_cycles(3);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].elements == vb({2, 4}));

  auto b10 = ssd::enumerate_cycles(10);
  REQUIRE(b10.size() == 1);
  CHECK(b10[0].elements == vb({4, 16, 37, 58, 89, 145, 42, 20}));

  auto b12 = ssd::enumerate_cycles(12);
  REQUIRE(b12.size() == 4);
  CHECK(b12[0].elements == vb({5, 25}));
  CHECK(b12[1].elements == vb({8, 64, 41, 34, 104, 128, 164, 66, 61, 26}));
  CHECK(b12[2].elements == vb({20, 65, 50}));
  CHECK(b12[3].elements == vb({80, 100}));
}

TEST_CASE("enumerate_cycles matches reference for all small bases") {
  for (std::uint64_t b = 2; b <= 20; ++b) {
    auto got = ssd::enumerate_cycles(b);
    auto expect = oracle::cycles_u64(b);
    REQUIRE(got.size() == expect.size());
    std::set<std::vector<std::uint64_t>> got_set;
    for (const auto& c : got) {
      std::vector<std::uint64_t> key;
      for (const auto& e : c.elements) key.push_back(ssd::to_u64(e));
      got_set.insert(key);
    }
    CHECK(got_set == expect);
  }
}

TEST_CASE("cycle elements lie below 2b^2, exhaustive small bases") {
  for (std::uint64_t b = 2; b <= 40; ++b) {
    for (std::uint64_t seed = 1; seed <= 2 * b * b - 1; ++seed) {
      auto rec = ssd::orbit(seed, b);
      for (const Bigint& e : rec.cycle.elements) CHECK(e < Bigint(2 * b * b));
    }
  }
}

TEST_CASE("fixed points: brute force, frozen and reference") {
  CHECK(ssd::enumerate_fixed_points_bruteforce(12) == vb({1, 29, 125}));
  CHECK(ssd::enumerate_fixed_points_bruteforce(2) == vb({1}));
  // see notes: 10 = 1.3|_7 and 45 = 6.3|_7 are fixed alongside 1, 25, 32
  CHECK(ssd::enumerate_fixed_points_bruteforce(7) == vb({1, 10, 25, 32, 45}));
  for (std::uint64_t b = 2; b <= 60; ++b) {
    auto got = ssd::enumerate_fixed_points_bruteforce(b);
    auto expect = oracle::fixed_points_u64(b);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(got[i] == expect[i]);
  }
}

TEST_CASE("nontrivial fixed points have exactly two digits, b <= 200") {
  for (std::uint64_t b = 2; b <= 200; ++b) {
    for (const Bigint& v : ssd::enumerate_fixed_points_bruteforce(b)) {
      if (v == 1) continue;
      CHECK(ssd::digit_count(v, b) == 2);
    }
  }
}

TEST_CASE("cycle membership consistency") {
  for (std::uint64_t b : {5, 10, 12}) {
    std::set<Bigint> from_enumeration;
    for (const auto& c : ssd::enumerate_cycles(b))
      from_enumeration.insert(c.elements.begin(), c.elements.end());

    auto fixed = ssd::enumerate_fixed_points_bruteforce(b);
    std::set<Bigint> recurrent;
    for (std::uint64_t n = 1; n <= 2 * b * b - 1; ++n) {
      auto rec = ssd::orbit(n, b);
      bool on_cycle = rec.tail.size() == 1 && rec.tail[0] == n &&
                      std::find(rec.cycle.elements.begin(),
                                rec.cycle.elements.end(),
                                Bigint(n)) != rec.cycle.elements.end();
      if (on_cycle &&
          std::find(fixed.begin(), fixed.end(), Bigint(n)) == fixed.end())
        recurrent.insert(n);
    }
    CHECK(from_enumeration == recurrent);
  }
}

TEST_CASE("enumerate_cycles is worker-count invariant") {
  auto one = ssd::enumerate_cycles(144, 1);
  auto three = ssd::enumerate_cycles(144, 3);
  auto eight = ssd::enumerate_cycles(144, 8);
  CHECK(one == three);
  CHECK(one == eight);
}

TEST_CASE("orbit domain errors") {
  CHECK_THROWS_AS(ssd::orbit(0, 10), std::domain_error);
  CHECK_THROWS_AS(ssd::orbit(5, 1), std::domain_error);
  CHECK_THROWS_AS(ssd::enumerate_cycles(1), std::domain_error);
  CHECK_THROWS_AS(ssd::enumerate_fixed_points_bruteforce(0), std::domain_error);
}
