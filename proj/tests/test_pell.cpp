#include <algorithm>
#include <thread>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "ssd/fixed_points.hpp"
#include "ssd/orbit.hpp"
#include "ssd/pell.hpp"

using ssd::Bigint;
using ssd::CycleKind;
using ssd::IndexPair;
using ssd::IntPoly;
using ssd::make_poly;
using ssd::PellFixedVariant;
using ssd::PellIdentity;

TEST_CASE("pell polynomials: base cases and recurrence") {
  CHECK(ssd::pell(0).is_zero());
  CHECK(ssd::pell(1) == ssd::poly_constant(1));
  CHECK(ssd::pell(2) == make_poly({0, 2}));
  CHECK(ssd::pell(3) == make_poly({1, 0, 4}));
  CHECK(ssd::pell(4) == make_poly({0, 4, 0, 8}));
  CHECK(ssd::pell(5) == make_poly({1, 0, 12, 0, 16}));

  // recurrence unrolled by hand through the raw polynomial ops
  CHECK(ssd::poly_add(ssd::poly_mul(ssd::poly_monomial(2, 1), ssd::pell(3)), ssd::pell(2)) ==
        ssd::pell(4));

  SUBCASE("values at integer points match the number recurrence") {
    CHECK(ssd::poly_eval(ssd::pell(4), 1) == 12);
    CHECK(ssd::poly_eval(ssd::pell(6), 1) == 70);
    CHECK(ssd::poly_eval(ssd::pell(10), 1) == 2378);
    for (std::size_t n = 0; n <= 40; ++n) {
      for (long x : {1L, 2L, 3L, 7L}) {
        CHECK(ssd::poly_eval(ssd::pell(n), x) == oracle::pell_at(n, x));
      }
    }
  }

  SUBCASE("memo table is safe under concurrent growth") {
    std::vector<std::thread> workers;
    std::vector<IntPoly> results(8);
    for (int t = 0; t < 8; ++t) {
      workers.emplace_back([&results, t] { results[static_cast<std::size_t>(t)] = ssd::pell(100 + t); });
    }
    for (auto& w : workers) w.join();
    for (int t = 0; t < 8; ++t) {
      CHECK(ssd::poly_eval(results[static_cast<std::size_t>(t)], 1) ==
            oracle::pell_at(100 + t, 1));
    }
  }
}

TEST_CASE("pell identities are zero polynomials") {
  SUBCASE("frozen cases") {
    CHECK(ssd::pell_identity_residual(PellIdentity::Lucas, {2}).is_zero());
    CHECK(ssd::pell(5) == ssd::poly_add(ssd::poly_mul(ssd::pell(3), ssd::pell(3)),
                                        ssd::poly_mul(ssd::pell(2), ssd::pell(2))));
    CHECK(ssd::pell_identity_residual(PellIdentity::Catalan, {5, 5}).is_zero());
    CHECK(ssd::pell_identity_residual(PellIdentity::DOcagne, {1}).is_zero());
  }

  SUBCASE("sweeps") {
    for (long long n = 1; n <= 20; ++n) {
      CHECK(ssd::pell_identity_residual(PellIdentity::Cassini, {n}).is_zero());
      CHECK(ssd::pell_identity_residual(PellIdentity::DOcagne, {n}).is_zero());
    }
    for (long long n = 0; n <= 20; ++n) {
      CHECK(ssd::pell_identity_residual(PellIdentity::Lucas, {n}).is_zero());
      for (long long r = 0; r <= n; ++r) {
        CHECK(ssd::pell_identity_residual(PellIdentity::Catalan, {n, r}).is_zero());
      }
    }
    for (long long n = 0; n <= 8; ++n) {
      for (long long r = 0; r <= 8; ++r) {
        for (long long s = 0; s <= 8; ++s) {
          CHECK(ssd::pell_identity_residual(PellIdentity::Vajda, {n, r, s}).is_zero());
        }
      }
    }
  }

  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(ssd::pell_identity_residual(PellIdentity::Cassini, {0}), std::domain_error);
    CHECK_THROWS_AS(ssd::pell_identity_residual(PellIdentity::Cassini, {1, 2}), std::domain_error);
    CHECK_THROWS_AS(ssd::pell_identity_residual(PellIdentity::Catalan, {2, 3}), std::domain_error);
    CHECK_THROWS_AS(ssd::pell_identity_residual(PellIdentity::Vajda, {-1, 0, 0}),
                    std::domain_error);
    CHECK_THROWS_AS(ssd::pell_identity_residual(PellIdentity::DOcagne, {0}), std::domain_error);
  }
}

TEST_CASE("pell fixed points: symbolic residuals") {
  SUBCASE("frozen n = 1") {
    const auto a = ssd::pell_fixed_point(1, PellFixedVariant::A);
    CHECK(a.pair.hi == make_poly({0, 2}));
    CHECK(a.pair.lo == make_poly({1, 0, 4}));
    CHECK(a.pair.base == make_poly({0, 4, 0, 8}));
    CHECK(a.residual.is_zero());

    // variant c at n = 1 coincides with variant a (the factor p_1 = 1)
    const auto c = ssd::pell_fixed_point(1, PellFixedVariant::C);
    CHECK(c.pair == a.pair);

    const auto b = ssd::pell_fixed_point(1, PellFixedVariant::B);
    CHECK(b.pair.lo == ssd::pell(5));
    CHECK(b.pair.base == ssd::pell(8));
    CHECK(b.residual.is_zero());
  }

  SUBCASE("evaluated at x = 1 the small cases are recognizable fixed points") {
    const auto a = ssd::pell_fixed_point(1, PellFixedVariant::A);
    const Bigint base = ssd::poly_eval(a.pair.base, 1);
    const Bigint value =
        ssd::poly_eval(a.pair.hi, 1) * base + ssd::poly_eval(a.pair.lo, 1);
    CHECK(base == 12);
    CHECK(value == 29);
    CHECK(ssd::sum_square_digits(value, base) == value);
  }

  SUBCASE("all variants, n up to 10") {
    for (long n = 1; n <= 10; ++n) {
      for (PellFixedVariant v :
           {PellFixedVariant::A, PellFixedVariant::B, PellFixedVariant::C}) {
        CAPTURE(n);
        CHECK(ssd::pell_fixed_point(n, v).residual.is_zero());
      }
    }
  }

  CHECK_THROWS_AS(ssd::pell_fixed_point(0, PellFixedVariant::A), std::domain_error);
}

TEST_CASE("pell cycles: symbolic step verification") {
  SUBCASE("frozen TypeI n = 2") {
    const auto cyc = ssd::pell_cycle(CycleKind::TypeI, 2);
    CHECK(cyc.base == ssd::pell(4));
    CHECK(cyc.pairs == std::vector<IndexPair>{{0, 3}, {2, 1}});
    CHECK(cyc.elements[0].hi.is_zero());
    CHECK(cyc.elements[0].lo == ssd::pell(3));
    CHECK(cyc.elements[1].hi == ssd::pell(2));
    CHECK(cyc.elements[1].lo == ssd::poly_constant(1));
    CHECK_FALSE(cyc.fixed_point);
    for (const IntPoly& r : cyc.step_residuals) CHECK(r.is_zero());
  }

  SUBCASE("frozen TypeII n = 2: single fixed element") {
    const auto cyc = ssd::pell_cycle(CycleKind::TypeII, 2);
    CHECK(cyc.fixed_point);
    CHECK(cyc.pairs == std::vector<IndexPair>{{2, 3}});
    CHECK(cyc.base == ssd::pell(4));
    CHECK(cyc.step_residuals.size() == 1);
    CHECK(cyc.step_residuals[0].is_zero());
  }

  SUBCASE("TypeI n = 3 terminal element is p_2.p_3") {
    const auto cyc = ssd::pell_cycle(CycleKind::TypeI, 3);
    CHECK(cyc.pairs.back() == IndexPair{2, 3});
    CHECK(cyc.elements.back().hi == ssd::pell(2));
    CHECK(cyc.elements.back().lo == ssd::pell(3));
  }

  SUBCASE("both kinds, n up to 10") {
    for (CycleKind kind : {CycleKind::TypeI, CycleKind::TypeII}) {
      for (long n = 2; n <= 10; ++n) {
        CAPTURE(n);
        const auto cyc = ssd::pell_cycle(kind, n);
        CHECK(cyc.step_residuals.size() == cyc.elements.size());
        for (const IntPoly& r : cyc.step_residuals) CHECK(r.is_zero());
        const bool even = n % 2 == 0;
        const IndexPair expected = kind == CycleKind::TypeI
                                       ? (even ? IndexPair{n, n - 1} : IndexPair{n - 1, n})
                                       : (even ? IndexPair{n, n + 1} : IndexPair{n + 1, n});
        CHECK(cyc.pairs.back() == expected);
      }
    }
  }

  CHECK_THROWS_AS(ssd::pell_cycle(CycleKind::TypeI, 1), std::domain_error);
}

TEST_CASE("pell cycles evaluated at integer points") {
  SUBCASE("x = 1 reproduces the base-12 cycle") {
    const auto cyc = ssd::pell_evaluate_cycle(CycleKind::TypeI, 2, 1);
    CHECK(cyc.base == 12);
    CHECK(cyc.elements == std::vector<Bigint>{5, 25});
  }
  SUBCASE("x = 1, TypeII n = 2 is the base-12 fixed point 29") {
    const auto cyc = ssd::pell_evaluate_cycle(CycleKind::TypeII, 2, 1);
    CHECK(cyc.base == 12);
    CHECK(cyc.elements == std::vector<Bigint>{29});
  }
  SUBCASE("frozen larger evaluations") {
    CHECK(ssd::pell_evaluate_cycle(CycleKind::TypeI, 3, 1) ==
          ssd::Cycle{70, {29, 841, 145}});
    CHECK(ssd::pell_evaluate_cycle(CycleKind::TypeI, 2, 2) == ssd::Cycle{72, {17, 289}});
    CHECK(ssd::pell_evaluate_cycle(CycleKind::TypeII, 3, 1) == ssd::Cycle{70, {169, 845}});
  }
  SUBCASE("orbit cross-check over a grid") {
    for (CycleKind kind : {CycleKind::TypeI, CycleKind::TypeII}) {
      for (long n = 2; n <= 6; ++n) {
        for (long x : {1L, 2L, 3L}) {
          CAPTURE(n);
          CAPTURE(x);
          // internal verification against orbit() throws on any disagreement
          const auto cyc = ssd::pell_evaluate_cycle(kind, n, x);
          CHECK(cyc.base == oracle::pell_at(2 * static_cast<std::uint64_t>(n), x));
        }
      }
    }
  }

  CHECK_THROWS_AS(ssd::pell_evaluate_cycle(CycleKind::TypeI, 2, 0), std::domain_error);
}

TEST_CASE("evaluated pell constructions appear in exhaustive enumeration") {
  // cycles at x = 1, bases p_4(1)=12, p_6(1)=70, p_8(1)=408
  for (long n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto c1 = ssd::pell_evaluate_cycle(CycleKind::TypeI, n, 1);
    const auto all1 = ssd::enumerate_cycles(c1.base);
    CHECK(std::count(all1.begin(), all1.end(), c1) == 1);

    const auto c2 = ssd::pell_evaluate_cycle(CycleKind::TypeII, n, 1);
    if (c2.elements.size() == 1) {
      const auto fixed = ssd::enumerate_fixed_points_bruteforce(c2.base);
      CHECK(std::count(fixed.begin(), fixed.end(), c2.elements.front()) == 1);
    } else {
      const auto all2 = ssd::enumerate_cycles(c2.base);
      CHECK(std::count(all2.begin(), all2.end(), c2) == 1);
    }
  }

  // fixed points at x = 1: small bases brute-forced, larger ones cross-checked
  // against the structural two-square solver
  auto value_at_one = [](const ssd::PellFixedPoint& fp) {
    return ssd::poly_eval(fp.pair.hi, 1) * ssd::poly_eval(fp.pair.base, 1) +
           ssd::poly_eval(fp.pair.lo, 1);
  };
  auto check_membership = [&](const ssd::PellFixedPoint& fp) {
    const Bigint base = ssd::poly_eval(fp.pair.base, 1);
    const Bigint value = value_at_one(fp);
    if (2 * base * base <= 20'000'000) {
      const auto fixed = ssd::enumerate_fixed_points_bruteforce(base);
      CHECK(std::count(fixed.begin(), fixed.end(), value) == 1);
    } else {
      bool found = false;
      for (const auto& td : ssd::fixed_points_structural(base)) {
        if (td.value() == value) found = true;
      }
      CHECK(found);
    }
  };
  check_membership(ssd::pell_fixed_point(1, PellFixedVariant::A));  // 29 in base 12
  check_membership(ssd::pell_fixed_point(2, PellFixedVariant::A));  // base 2378
  check_membership(ssd::pell_fixed_point(1, PellFixedVariant::B));  // 845 in base 408
  check_membership(ssd::pell_fixed_point(2, PellFixedVariant::B));  // base 80782, structural
  check_membership(ssd::pell_fixed_point(2, PellFixedVariant::C));  // 24625 in base 408
  check_membership(ssd::pell_fixed_point(3, PellFixedVariant::C));  // base 13860, structural
}

TEST_CASE("arithmetic pell families: sampled k residuals") {
  const std::vector<long long> samples{0, 1, 2, 3};

  SUBCASE("frozen") {
    CHECK(ssd::pell_arith_check(CycleKind::TypeI, 2, 0, samples).all_zero());
    CHECK(ssd::pell_arith_check(CycleKind::TypeII, 2, 1, samples).all_zero());
    CHECK(ssd::pell_arith_fixed_check(1, samples).all_zero());
  }

  SUBCASE("sweep all admissible indices") {
    for (long n = 1; n <= 6; ++n) {
      CAPTURE(n);
      for (long i = 0; i <= n - 1; ++i) {
        CHECK(ssd::pell_arith_check(CycleKind::TypeI, n, i, samples).all_zero());
      }
      for (long i = 1; i <= n; ++i) {
        CHECK(ssd::pell_arith_check(CycleKind::TypeII, n, i, samples).all_zero());
      }
      CHECK(ssd::pell_arith_fixed_check(n, samples).all_zero());
    }
  }

  SUBCASE("wider and negative samples work too") {
    CHECK(ssd::pell_arith_check(CycleKind::TypeI, 3, 1, {-2, -1, 5, 11}).all_zero());
    CHECK(ssd::pell_arith_fixed_check(2, {-3, 0, 7, 10}).all_zero());
  }

  SUBCASE("sampling contract") {
    CHECK_THROWS_AS(ssd::pell_arith_check(CycleKind::TypeI, 2, 0, {0, 1, 2}), std::domain_error);
    CHECK_THROWS_AS(ssd::pell_arith_check(CycleKind::TypeI, 2, 0, {0, 0, 1, 1}),
                    std::domain_error);
    CHECK_THROWS_AS(ssd::pell_arith_fixed_check(1, {4, 4, 4, 4}), std::domain_error);
  }

  SUBCASE("index ranges") {
    CHECK_THROWS_AS(ssd::pell_arith_check(CycleKind::TypeI, 2, 2, samples), std::domain_error);
    CHECK_THROWS_AS(ssd::pell_arith_check(CycleKind::TypeII, 2, 0, samples), std::domain_error);
    // i = n+1 would need the undefined index -1 in the k-shifted digit
    // p_{N-2i}, so the admissible range stops at n
    CHECK_THROWS_AS(ssd::pell_arith_check(CycleKind::TypeII, 2, 3, samples), std::domain_error);
    CHECK_THROWS_AS(ssd::pell_arith_check(CycleKind::TypeI, 0, 0, samples), std::domain_error);
  }
}
