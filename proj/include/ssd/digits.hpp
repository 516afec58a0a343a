#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ssd/bigint.hpp"

namespace ssd {

// Base-b expansion, most significant digit first. 0 expands to a single 0 digit.
struct Digits {
  Bigint base;
  std::vector<Bigint> digits;

  bool operator==(const Digits&) const = default;
};

// Requires base >= 2, n >= 0.
Digits to_digits(const Bigint& n, const Bigint& base);

// Horner evaluation of a digit expansion. Requires every digit in [0, base).
Bigint from_digits(const Digits& d);

std::size_t digit_count(const Bigint& n, const Bigint& base);

// The map S_b: sum of the squares of the base-b digits of n.
// Requires base >= 2, n >= 1.
Bigint sum_square_digits(const Bigint& n, const Bigint& base);

// A two-digit value x.y|_b, i.e. x*b + y with 0 <= x, y < b. The high digit
// may be zero (values below the base are x = 0).
struct TwoDigit {
  Bigint base;
  Bigint hi;
  Bigint lo;

  Bigint value() const { return hi * base + lo; }
  std::string notation() const;  // "hi.lo|_base"

  bool operator==(const TwoDigit&) const = default;
};

// Validates the digit ranges. Throws std::domain_error otherwise.
TwoDigit make_two_digit(const Bigint& base, const Bigint& hi, const Bigint& lo);

// Splits a value < base^2 into its two digits. Requires 1 <= value < base^2.
TwoDigit two_digit_of(const Bigint& value, const Bigint& base);

// S_base(t.value()) == t.value()
bool is_fixed_point(const TwoDigit& t);

namespace detail {

// Word-sized S_b for scan loops. Safe whenever base < 2^20 and n < 2^63:
// each squared digit is below 2^40 and there are at most 63 of them.
inline constexpr std::uint64_t kSmallBaseLimit = std::uint64_t(1) << 20;

inline std::uint64_t sum_square_digits_u64(std::uint64_t n, std::uint64_t b) {
  std::uint64_t acc = 0;
  while (n != 0) {
    std::uint64_t d = n % b;
    n /= b;
    acc += d * d;
  }
  return acc;
}

}  // namespace detail

}  // namespace ssd
