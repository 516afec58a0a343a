#include "ssd/fixed_points.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssd {

std::uint64_t divisor_count(const Bigint& m) {
  if (m < 1) throw std::domain_error("divisor_count: m must be >= 1");
  std::uint64_t count = 0;
  Bigint d = 1;
  for (; d * d < m; ++d)
    if (m % d == 0) count += 2;
  if (d * d == m) ++count;
  return count;
}

std::vector<TwoSquareRep> two_square_representations(const Bigint& m,
                                                     const Bigint& base) {
  if (base < 2)
    throw std::domain_error("two_square_representations: base must be >= 2");
  if (m != 1 + base * base)
    throw std::domain_error("two_square_representations: m must equal 1 + base^2");

  std::vector<TwoSquareRep> out;
  Bigint start = -base;  // parity of -b matches b
  for (Bigint u = start; u < base; u += 2) {
    Bigint rest = m - u * u;
    if (rest < 1) continue;
    Bigint v = isqrt(rest);
    if (v * v != rest) continue;
    if (v % 2 != 1) continue;
    if (v < 1 || v > 2 * base - 3) continue;
    out.push_back(TwoSquareRep{u, v});
  }
  return out;  // already ascending in u
}

std::vector<TwoDigit> fixed_points_structural(const Bigint& base) {
  if (base < 2)
    throw std::domain_error("fixed_points_structural: base must be >= 2");
  std::vector<TwoDigit> out;
  for (const TwoSquareRep& rep :
       two_square_representations(1 + base * base, base)) {
    Bigint x = (rep.u + base) / 2;
    Bigint y = (rep.v + 1) / 2;
    out.push_back(make_two_digit(base, x, y));
  }
  std::sort(out.begin(), out.end(), [](const TwoDigit& a, const TwoDigit& b) {
    return a.value() < b.value();
  });
  return out;
}

}  // namespace ssd
