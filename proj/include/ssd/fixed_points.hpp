#pragma once

#include <cstdint>
#include <vector>

#include "ssd/bigint.hpp"
#include "ssd/digits.hpp"

namespace ssd {

// Number of positive divisors, by trial division up to sqrt(m). m >= 1.
std::uint64_t divisor_count(const Bigint& m);

// A solution of u^2 + v^2 = m under the fixed-point ranges for base b.
struct TwoSquareRep {
  Bigint u;
  Bigint v;
  bool operator==(const TwoSquareRep&) const = default;
};

// All (u, v) with u^2 + v^2 = m where u has the parity of b with -b <= u < b,
// and v is odd with 1 <= v <= 2b-3 (v = 2y-1 for a digit y in [1, b)).
// Ordered by u ascending. Requires m = 1 + b^2.
std::vector<TwoSquareRep> two_square_representations(const Bigint& m,
                                                     const Bigint& base);

// Every fixed point of S_base, from the two-square solutions of 1 + base^2
// via x = (u+b)/2, y = (v+1)/2. Ascending by value; the first entry is the
// trivial fixed point 1 = 0.1|_b. Count is divisor_count(1+b^2) - 1.
std::vector<TwoDigit> fixed_points_structural(const Bigint& base);

}  // namespace ssd
