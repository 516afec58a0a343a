#pragma once

#include <string>
#include <vector>

#include "ssd/bigint.hpp"
#include "ssd/digits.hpp"
#include "ssd/pairs.hpp"

namespace ssd {

// Two cycle families with Fibonacci-number digits, one per index map:
//   TypeI  (plus map):  N = 2n-1, base F_{N+1} + F_{N+2} k, start [0, N]
//   TypeII (minus map): N = 2n+1, base F_{N-1} + F_{N-2} k, start [2, N-2]
enum class CycleKind { TypeI, TypeII };

std::string cycle_kind_name(CycleKind kind);  // "type1" / "type2"

struct FibCycleSpec {
  CycleKind kind;
  long n;
  Bigint k;
  Bigint base;
  std::vector<IndexPair> pairs;     // orbit of the start pair under psi
  std::vector<TwoDigit> elements;   // digit images, same order
  bool fixed_point;                 // single-element orbit (TypeII, n = 2)
};

// Builds the orbit of the start pair and its digit image, then checks that
// the image really is a cycle of the sum-of-squared-digits map: consecutive
// values map to each other and the last maps back to the first. The terminal
// pair before closing is [n, n-1] / [n-1, n] (TypeI, n even / odd) resp.
// [n, n+1] / [n+1, n] (TypeII). Requires n >= 2, k >= 0.
FibCycleSpec build_cycle(CycleKind kind, long n, const Bigint& k);

// One-parameter fixed-point families living at isolated index pairs:
//   minus: F_{2n} . F_{4n-1} over base F_{6n-2}  (pair [2n, 4n-1], N = 6n-1)
//   plus:  F_{2n} . F_{4n+1} over base F_{6n+2}  (pair [2n, 4n+1], N = 6n+1)
enum class IsolatedVariant { Minus, Plus };

// "Isolated" is a statement about the index-pair system: the pair is a fixed
// point of its index map with no preimage in the pair family, so the number
// belongs to no constructed cycle. It is NOT preimage-freeness of the value
// under the digit map itself — that is impossible for any two-digit fixed
// point x.y|_b with x != y, because the digit-reversed number y.x|_b also
// maps to x^2 + y^2. The scan below records such numeric preimages.
struct IsolatedFixedPoint {
  IsolatedVariant variant;
  long n;
  TwoDigit point;
  bool pair_isolated;                    // no preimage in the index-pair family
  bool scanned;                          // exhaustive value scan over {1..2b^2-1} ran
  std::vector<Bigint> numeric_preimages; // values != point mapping onto it (when scanned)
};

// Requires n >= 1. The point is verified fixed and its index pair is verified
// isolated; both throw std::logic_error on violation. The numeric preimage
// scan runs when feasible (small base) and reports what it finds.
IsolatedFixedPoint isolated_fib_fixed_point(long n, IsolatedVariant variant);

// Coefficients of the k-expansion of  hi^2 + lo^2 - (hi' * base + lo')  for
// one step of the corresponding index map, where the step sends digit indices
// (i, N-i) to the resolved pair. All three vanish identically; the call also
// cross-checks the expansion against the directly evaluated difference at the
// supplied k. TypeI: odd N >= 1, 0 <= i <= (N-1)/2. TypeII: odd N >= 3,
// 1 <= i <= (N-1)/2.
struct ArithBrackets {
  Bigint c0;
  Bigint c1;
  Bigint c2;

  bool all_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
};

ArithBrackets arith_step_check(CycleKind kind, long N, long i, const Bigint& k);

}  // namespace ssd
