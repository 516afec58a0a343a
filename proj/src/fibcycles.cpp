#include "ssd/fibcycles.hpp"

#include <stdexcept>
#include <string>

#include "ssd/conjugacy.hpp"
#include "ssd/fib.hpp"

namespace ssd {

namespace {

Bigint F(long index) {
  if (index < 0) throw std::logic_error("fibcycles: negative Fibonacci index");
  return fib(static_cast<std::size_t>(index));
}

// Exhaustive preimage scans stay affordable while 2*base^2 is below this.
constexpr std::uint64_t kIsolationScanLimit = 100'000'000;

}  // namespace

std::string cycle_kind_name(CycleKind kind) {
  return kind == CycleKind::TypeI ? "type1" : "type2";
}

FibCycleSpec build_cycle(CycleKind kind, long n, const Bigint& k) {
  if (n < 2) throw std::domain_error("build_cycle: n must be at least 2");
  if (k < 0) throw std::domain_error("build_cycle: k must be nonnegative");

  const bool type1 = kind == CycleKind::TypeI;
  const long N = type1 ? 2 * n - 1 : 2 * n + 1;
  const Sign sign = type1 ? Sign::Plus : Sign::Minus;
  const IndexPair start = type1 ? IndexPair{0, N} : IndexPair{2, N - 2};

  FibCycleSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.k = k;

  spec.pairs.push_back(start);
  for (IndexPair cur = psi(N, sign, start); cur != start; cur = psi(N, sign, cur)) {
    spec.pairs.push_back(cur);
  }
  spec.fixed_point = spec.pairs.size() == 1;

  for (const IndexPair& p : spec.pairs) {
    spec.elements.push_back(pair_value(N, sign, p, k));
  }
  spec.base = spec.elements.front().base;

  for (std::size_t idx = 0; idx < spec.elements.size(); ++idx) {
    const TwoDigit& from = spec.elements[idx];
    const TwoDigit& to = spec.elements[(idx + 1) % spec.elements.size()];
    if (sum_square_digits(from.value(), spec.base) != to.value()) {
      throw std::logic_error("build_cycle: digit image is not closed under the map at " +
                             from.notation());
    }
  }

  const bool even = n % 2 == 0;
  const IndexPair expected_terminal =
      type1 ? (even ? IndexPair{n, n - 1} : IndexPair{n - 1, n})
            : (even ? IndexPair{n, n + 1} : IndexPair{n + 1, n});
  if (spec.pairs.back() != expected_terminal) {
    throw std::logic_error("build_cycle: unexpected terminal pair for n=" + std::to_string(n));
  }

  return spec;
}

IsolatedFixedPoint isolated_fib_fixed_point(long n, IsolatedVariant variant) {
  if (n < 1) throw std::domain_error("isolated_fib_fixed_point: n must be at least 1");
  const bool minus = variant == IsolatedVariant::Minus;
  const Bigint base = F(minus ? 6 * n - 2 : 6 * n + 2);
  const TwoDigit point = make_two_digit(base, F(2 * n), F(minus ? 4 * n - 1 : 4 * n + 1));
  const Bigint value = point.value();

  if (sum_square_digits(value, base) != value) {
    throw std::logic_error("isolated_fib_fixed_point: " + point.notation() + " is not fixed");
  }

  IsolatedFixedPoint out{variant, n, point, true, false, {}};

  // Isolation lives in the index-pair system: nothing else in the family
  // maps onto the pair.
  const long N = minus ? 6 * n - 1 : 6 * n + 1;
  const Sign sign = minus ? Sign::Minus : Sign::Plus;
  const IndexPair pair{2 * n, minus ? 4 * n - 1 : 4 * n + 1};
  if (psi(N, sign, pair) != pair) {
    throw std::logic_error("isolated_fib_fixed_point: index pair is not fixed");
  }
  for (const IndexPair& q : pair_family(N, sign)) {
    if (q != pair && psi(N, sign, q) == pair) {
      throw std::logic_error("isolated_fib_fixed_point: index pair has a preimage");
    }
  }

  // Value-level scan: collect every m in {1..2b^2-1} mapping onto the point.
  // The digit swap guarantees this list is nonempty (see header).
  if (fits_u64(base) && to_u64(base) < detail::kSmallBaseLimit &&
      2 * to_u64(base) * to_u64(base) <= kIsolationScanLimit) {
    const std::uint64_t b = to_u64(base);
    const std::uint64_t v = to_u64(value);
    const std::uint64_t limit = 2 * b * b;
    for (std::uint64_t m = 1; m < limit; ++m) {
      if (m != v && detail::sum_square_digits_u64(m, b) == v) {
        out.numeric_preimages.push_back(Bigint(m));
      }
    }
    out.scanned = true;
  }
  return out;
}

ArithBrackets arith_step_check(CycleKind kind, long N, long i, const Bigint& k) {
  if (N < 1 || N % 2 == 0) {
    throw std::domain_error("arith_step_check: N must be a positive odd integer");
  }
  if (k < 0) throw std::domain_error("arith_step_check: k must be nonnegative");

  ArithBrackets out;
  Bigint hi, lo, res_hi, res_lo, base;  // digit polynomials evaluated at k

  if (kind == CycleKind::TypeI) {
    if (i < 0 || i > (N - 1) / 2) {
      throw std::domain_error("arith_step_check: need 0 <= i <= (N-1)/2 for type1");
    }
    out.c0 = F(i) * F(i) + F(N - i) * F(N - i) - F(N - 2 * i - 1) * F(N + 1) - F(2 * i + 1);
    out.c1 = 2 * F(i) * F(i + 1) + 2 * F(N - i) * F(N - i + 1) - F(N - 2 * i - 1) * F(N + 2) -
             F(N - 2 * i) * F(N + 1) - F(2 * i + 2);
    out.c2 = F(i + 1) * F(i + 1) + F(N - i + 1) * F(N - i + 1) - F(N - 2 * i) * F(N + 2);

    hi = F(i) + F(i + 1) * k;
    lo = F(N - i) + F(N - i + 1) * k;
    res_hi = F(N - 2 * i - 1) + F(N - 2 * i) * k;
    res_lo = F(2 * i + 1) + F(2 * i + 2) * k;
    base = F(N + 1) + F(N + 2) * k;
  } else {
    if (N < 3) throw std::domain_error("arith_step_check: type2 needs N >= 3");
    if (i < 1 || i > (N - 1) / 2) {
      throw std::domain_error("arith_step_check: need 1 <= i <= (N-1)/2 for type2");
    }
    out.c0 = F(i) * F(i) + F(N - i) * F(N - i) - F(N - 2 * i + 1) * F(N - 1) - F(2 * i - 1);
    out.c1 = 2 * F(i) * F(i - 1) + 2 * F(N - i) * F(N - i - 1) - F(N - 2 * i + 1) * F(N - 2) -
             F(N - 2 * i) * F(N - 1) - F(2 * i - 2);
    out.c2 = F(i - 1) * F(i - 1) + F(N - i - 1) * F(N - i - 1) - F(N - 2 * i) * F(N - 2);

    hi = F(i) + F(i - 1) * k;
    lo = F(N - i) + F(N - i - 1) * k;
    res_hi = F(N - 2 * i + 1) + F(N - 2 * i) * k;
    res_lo = F(2 * i - 1) + F(2 * i - 2) * k;
    base = F(N - 1) + F(N - 2) * k;
  }

  // The bracket expansion must agree with the directly computed difference at
  // the sampled k; a mismatch would mean the coefficients above are wrong.
  const Bigint direct = hi * hi + lo * lo - res_hi * base - res_lo;
  if (out.c0 + out.c1 * k + out.c2 * k * k != direct) {
    throw std::logic_error("arith_step_check: bracket expansion disagrees with direct value");
  }
  return out;
}

}  // namespace ssd
