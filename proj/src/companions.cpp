#include "ssd/companions.hpp"

#include <stdexcept>

#include "ssd/fib.hpp"

namespace ssd {

namespace {

// Both points fixed, digits swapped, one shared value. Violations here mean
// a construction bug, not bad input.
CompanionPair checked(Bigint b, Bigint b_prime, Bigint hi, Bigint lo) {
  CompanionPair pair{b, b_prime, make_two_digit(b, hi, lo),
                     make_two_digit(b_prime, lo, hi)};
  Bigint value = hi * hi + lo * lo;
  if (pair.point_in_b.value() != value ||
      pair.point_in_b_prime.value() != value)
    throw std::logic_error("companion pair: value mismatch");
  if (!is_fixed_point(pair.point_in_b) ||
      !is_fixed_point(pair.point_in_b_prime))
    throw std::logic_error("companion pair: point not fixed");
  return pair;
}

}  // namespace

CompanionPair companion_odd_base(const Bigint& n) {
  if (n < 2) throw std::domain_error("companion_odd_base: n must be >= 2");
  return checked(2 * n - 1, 2 * n - 1, n, n);
}

CompanionPair companion_nu(const Bigint& n, const Bigint& k) {
  if (n < 1) throw std::domain_error("companion_nu: n must be >= 1");
  if (k < 0) throw std::domain_error("companion_nu: k must be >= 0");
  Bigint u = n + 1 + n * k;
  Bigint b = n * n + n + 1 + (n * n + 1) * k;
  Bigint b_prime = n * n * n + n * n + 1 + n * (n * n + 1) * k;
  return checked(b, b_prime, n * u, u);
}

CompanionPair companion_mn(const Bigint& m, const Bigint& n, const Bigint& k) {
  if (!(n > m && m > 1))
    throw std::domain_error("companion_mn: need n > m > 1");
  if (boost::multiprecision::gcd(m, n) != 1)
    throw std::domain_error("companion_mn: m and n must be coprime");
  if (k < 0) throw std::domain_error("companion_mn: k must be >= 0");

  // least positive u with u*n = 1 (mod m) and u*m = 1 (mod n)
  Bigint u0 = 0;
  for (Bigint cand = 1; cand <= m * n; ++cand) {
    if ((cand * n) % m == 1 && (cand * m) % n == 1) {
      u0 = cand;
      break;
    }
  }
  if (u0 == 0) throw std::logic_error("companion_mn: no residue solution");

  Bigint mm_nn = m * m + n * n;
  if ((mm_nn * u0 - m) % n != 0 || (mm_nn * u0 - n) % m != 0)
    throw std::logic_error("companion_mn: base formula not integral");
  Bigint b = (mm_nn * u0 - m) / n + m * mm_nn * k;
  Bigint b_prime = (mm_nn * u0 - n) / m + n * mm_nn * k;
  Bigint u = u0 + m * n * k;
  return checked(b, b_prime, n * u, m * u);
}

CompanionPair companion_consecutive(const Bigint& n, const Bigint& k) {
  if (n < 1) throw std::domain_error("companion_consecutive: n must be >= 1");
  if (k < 0) throw std::domain_error("companion_consecutive: k must be >= 0");
  Bigint u = 2 * n + 1 + n * (n + 1) * k;
  Bigint base_poly = 2 * n * n + 2 * n + 1;
  Bigint b = 4 * n * n + 2 * n + 1 + n * base_poly * k;
  Bigint b_prime = 4 * n * n + 6 * n + 3 + (n + 1) * base_poly * k;
  return checked(b, b_prime, (n + 1) * u, n * u);
}

CompanionPair companion_fib(long n, const Bigint& k) {
  if (n < 1) throw std::domain_error("companion_fib: n must be >= 1");
  if (k < 0) throw std::domain_error("companion_fib: k must be >= 0");
  std::size_t m = std::size_t(n);
  Bigint u = fib(2 * m - 1) + fib(2 * m) * fib(2 * m + 1) * k;
  Bigint b = fib(4 * m - 1) + fib(2 * m) * fib(4 * m + 1) * k;
  Bigint b_prime = fib(4 * m) + fib(2 * m + 1) * fib(4 * m + 1) * k;
  Bigint hi = fib(2 * m + 1) * u;
  Bigint lo = fib(2 * m) * u;
  // make_two_digit rejects the degenerate n = 1, k = 0 instance (digit 2 in
  // base 2)
  return checked(b, b_prime, hi, lo);
}

static Bigint triangular(const Bigint& n) { return n * (n + 1) / 2; }

TriangularOrders triangular_order_check(const Bigint& n) {
  if (n < 2) throw std::domain_error("triangular_order_check: n must be >= 2");
  Bigint small = triangular(n), large = triangular(n + 1);
  Bigint b = n * n + n + 1;
  Bigint b_prime = n * n + 3 * n + 3;
  TriangularOrders orders{};
  orders.small_first_in_b = is_fixed_point(make_two_digit(b, small, large));
  orders.large_first_in_b = is_fixed_point(make_two_digit(b, large, small));
  orders.small_first_in_b_prime =
      is_fixed_point(make_two_digit(b_prime, small, large));
  orders.large_first_in_b_prime =
      is_fixed_point(make_two_digit(b_prime, large, small));
  return orders;
}

CompanionPair companion_triangular(const Bigint& n) {
  TriangularOrders orders = triangular_order_check(n);
  if (!(orders.large_first_in_b && orders.small_first_in_b_prime &&
        !orders.small_first_in_b && !orders.large_first_in_b_prime))
    throw std::logic_error(
        "companion_triangular: unexpected order/base assignment");
  Bigint b = n * n + n + 1;
  Bigint b_prime = n * n + 3 * n + 3;
  return checked(b, b_prime, triangular(n + 1), triangular(n));
}

}  // namespace ssd
