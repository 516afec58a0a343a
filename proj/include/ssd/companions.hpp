#pragma once

#include "ssd/bigint.hpp"
#include "ssd/digits.hpp"

namespace ssd {

// A value that is a fixed point in two bases at once, with its two digits
// swapped between them: x.y|_b and y.x|_b' share the value x^2 + y^2.
struct CompanionPair {
  Bigint base_b;
  Bigint base_b_prime;
  TwoDigit point_in_b;
  TwoDigit point_in_b_prime;

  bool operator==(const CompanionPair&) const = default;
};

// n.n|_{2n-1}: every odd base is its own companion. n >= 2.
CompanionPair companion_odd_base(const Bigint& n);

// u = n+1+nk: nu.u fixed in b = n^2+n+1 + (n^2+1)k,
//             u.nu fixed in b' = n^3+n^2+1 + n(n^2+1)k. n >= 1, k >= 0.
CompanionPair companion_nu(const Bigint& n, const Bigint& k);

// Coprime pair n > m > 1: u0 least positive solution of
// u = n^{-1} (mod m), u = m^{-1} (mod n); u = u0 + mnk;
//   nu.mu fixed in b  = ((m^2+n^2)u0 - m)/n + m(m^2+n^2)k,
//   mu.nu fixed in b' = ((m^2+n^2)u0 - n)/m + n(m^2+n^2)k. k >= 0.
CompanionPair companion_mn(const Bigint& m, const Bigint& n, const Bigint& k);

// The (m, n) = (n, n+1) closed forms, valid from n = 1 (where companion_mn's
// m > 1 domain does not reach): u = 2n+1 + n(n+1)k,
//   (n+1)u.nu fixed in b  = 4n^2+2n+1 + n(2n^2+2n+1)k,
//   nu.(n+1)u fixed in b' = 4n^2+6n+3 + (n+1)(2n^2+2n+1)k. k >= 0.
CompanionPair companion_consecutive(const Bigint& n, const Bigint& k);

// u = F_{2n-1} + F_{2n}F_{2n+1}k:
//   F_{2n+1}u.F_{2n}u fixed in b  = F_{4n-1} + F_{2n}F_{4n+1}k,
//   F_{2n}u.F_{2n+1}u fixed in b' = F_{4n}   + F_{2n+1}F_{4n+1}k.
// n >= 1, k >= 0. Throws std::domain_error when a digit reaches the base
// (exactly the n = 1, k = 0 instance).
CompanionPair companion_fib(long n, const Bigint& k);

// Triangular digits T_n, T_{n+1} over bases n^2+n+1 and n^2+3n+3. Both digit
// orders are checked in both bases; the returned pair carries the order that
// verifies: T_{n+1}.T_n in the smaller base, T_n.T_{n+1} in the larger.
// n >= 2.
CompanionPair companion_triangular(const Bigint& n);

// The full order-by-base fixedness matrix behind companion_triangular.
// small_first means digit order T_n.T_{n+1}.
struct TriangularOrders {
  bool small_first_in_b;
  bool large_first_in_b;
  bool small_first_in_b_prime;
  bool large_first_in_b_prime;
};
TriangularOrders triangular_order_check(const Bigint& n);

}  // namespace ssd
