#pragma once

#include <cstddef>
#include <vector>

#include "ssd/bigint.hpp"
#include "ssd/digits.hpp"
#include "ssd/pairs.hpp"

namespace ssd {

// Two-digit image of an index pair under the Fibonacci digit map:
//   plus:  (F_r + F_{r+1} k) . (F_s + F_{s+1} k)  over base F_{N+1} + F_{N+2} k
//   minus: (F_r + F_{r-1} k) . (F_s + F_{s-1} k)  over base F_{N-1} + F_{N-2} k
// Requires N >= 3 (plus) resp. N >= 5 (minus) and k >= 0. Throws
// std::domain_error when a digit falls outside [0, base) — for the minus map
// this happens exactly at [N-1, 1], whose high digit equals the base.
TwoDigit pair_value(long N, Sign sign, IndexPair p, const Bigint& k);

struct ConjugacyReport {
  long N = 0;
  Sign sign = Sign::Plus;
  Bigint k;
  std::size_t checked = 0;             // pairs where both sides were compared
  std::vector<IndexPair> skipped;      // digit image invalid (minus: [N-1, 1])
  std::vector<IndexPair> mismatched;   // conjugacy failed; expected empty

  bool all_match() const { return mismatched.empty(); }
};

// Checks S_b(value(p)) == value(psi(p)) over the whole family: applying the
// sum-of-squared-digits map to the digit image commutes with the index map.
// A pair is only compared when both p and psi(p) have valid digit images.
ConjugacyReport verify_conjugacy(long N, Sign sign, const Bigint& k);

}  // namespace ssd
