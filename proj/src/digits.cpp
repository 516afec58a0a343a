#include "ssd/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssd {

static void check_base(const Bigint& base, const char* who) {
  if (base < 2) throw std::domain_error(std::string(who) + ": base must be >= 2");
}

Digits to_digits(const Bigint& n, const Bigint& base) {
  check_base(base, "to_digits");
  if (n < 0) throw std::domain_error("to_digits: n must be >= 0");
  Digits out{base, {}};
  if (n == 0) {
    out.digits.push_back(0);
    return out;
  }
  Bigint rest = n;
  while (rest > 0) {
    out.digits.push_back(rest % base);
    rest /= base;
  }
  std::reverse(out.digits.begin(), out.digits.end());
  return out;
}

Bigint from_digits(const Digits& d) {
  check_base(d.base, "from_digits");
  if (d.digits.empty()) throw std::domain_error("from_digits: empty digit list");
  Bigint acc = 0;
  for (const Bigint& digit : d.digits) {
    if (digit < 0 || digit >= d.base)
      throw std::domain_error("from_digits: digit out of range [0, base)");
    acc = acc * d.base + digit;
  }
  return acc;
}

std::size_t digit_count(const Bigint& n, const Bigint& base) {
  check_base(base, "digit_count");
  if (n < 0) throw std::domain_error("digit_count: n must be >= 0");
  if (n == 0) return 1;
  std::size_t count = 0;
  Bigint rest = n;
  while (rest > 0) {
    ++count;
    rest /= base;
  }
  return count;
}

Bigint sum_square_digits(const Bigint& n, const Bigint& base) {
  check_base(base, "sum_square_digits");
  if (n < 1) throw std::domain_error("sum_square_digits: n must be >= 1");
  if (base < detail::kSmallBaseLimit && fits_u64(n) &&
      to_u64(n) < (std::uint64_t(1) << 63)) {
    return detail::sum_square_digits_u64(to_u64(n), to_u64(base));
  }
  Bigint acc = 0;
  Bigint rest = n;
  while (rest > 0) {
    Bigint d = rest % base;
    rest /= base;
    acc += d * d;
  }
  return acc;
}

std::string TwoDigit::notation() const {
  return hi.str() + "." + lo.str() + "|_" + base.str();
}

TwoDigit make_two_digit(const Bigint& base, const Bigint& hi, const Bigint& lo) {
  check_base(base, "make_two_digit");
  if (hi < 0 || hi >= base || lo < 0 || lo >= base)
    throw std::domain_error("make_two_digit: digit out of range [0, base): " +
                            hi.str() + "." + lo.str() + "|_" + base.str());
  return TwoDigit{base, hi, lo};
}

TwoDigit two_digit_of(const Bigint& value, const Bigint& base) {
  check_base(base, "two_digit_of");
  if (value < 1 || value >= base * base)
    throw std::domain_error("two_digit_of: value must be in [1, base^2)");
  return TwoDigit{base, value / base, value % base};
}

bool is_fixed_point(const TwoDigit& t) {
  Bigint v = t.value();
  if (v < 1) return false;
  return sum_square_digits(v, t.base) == v;
}

}  // namespace ssd
