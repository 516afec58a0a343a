#include "ssd/conjugacy.hpp"

#include <stdexcept>
#include <string>

#include "ssd/fib.hpp"

namespace ssd {

namespace {

void require_args(long N, Sign sign, const Bigint& k, const char* who) {
  const long min_n = sign == Sign::Plus ? 3 : 5;
  if (N < min_n || N % 2 == 0) {
    throw std::domain_error(std::string(who) + ": need odd N >= " + std::to_string(min_n) +
                            " for the " + sign_name(sign) + " map");
  }
  if (k < 0) throw std::domain_error(std::string(who) + ": k must be nonnegative");
}

Bigint digit_image(long index, Sign sign, const Bigint& k) {
  const long shift = sign == Sign::Plus ? 1 : -1;
  return fib(static_cast<std::size_t>(index)) +
         fib(static_cast<std::size_t>(index + shift)) * k;
}

}  // namespace

TwoDigit pair_value(long N, Sign sign, IndexPair p, const Bigint& k) {
  require_args(N, sign, k, "pair_value");
  if (!pair_in_family(N, sign, p)) {
    throw std::domain_error("pair_value: pair is not in the " + sign_name(sign) +
                            " family for N=" + std::to_string(N));
  }
  const long base_shift = sign == Sign::Plus ? 1 : -1;
  const Bigint base = fib(static_cast<std::size_t>(N + base_shift)) +
                      fib(static_cast<std::size_t>(N + 2 * base_shift)) * k;
  return make_two_digit(base, digit_image(p.r, sign, k), digit_image(p.s, sign, k));
}

ConjugacyReport verify_conjugacy(long N, Sign sign, const Bigint& k) {
  require_args(N, sign, k, "verify_conjugacy");
  ConjugacyReport report;
  report.N = N;
  report.sign = sign;
  report.k = k;
  for (const IndexPair& p : pair_family(N, sign)) {
    const IndexPair q = psi(N, sign, p);
    TwoDigit image{0, 0, 0};
    TwoDigit image_next{0, 0, 0};
    try {
      image = pair_value(N, sign, p, k);
      image_next = pair_value(N, sign, q, k);
    } catch (const std::domain_error&) {
      report.skipped.push_back(p);
      continue;
    }
    ++report.checked;
    if (sum_square_digits(image.value(), image.base) != image_next.value()) {
      report.mismatched.push_back(p);
    }
  }
  return report;
}

}  // namespace ssd
