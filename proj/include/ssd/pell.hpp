#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ssd/bigint.hpp"
#include "ssd/fibcycles.hpp"
#include "ssd/orbit.hpp"
#include "ssd/pairs.hpp"
#include "ssd/poly.hpp"

namespace ssd {

// Pell polynomials: p_0 = 0, p_1 = 1, p_n = 2x p_{n-1} + p_{n-2}.
// Thread-safe memoized lookup; p_2 = 2x, p_3 = 4x^2 + 1, p_4 = 8x^3 + 4x.
IntPoly pell(std::size_t n);

// The five classical identities carried over to Pell polynomials, checked as
// exact polynomial residuals (zero polynomial = identity holds for every x):
//   cassini : p_n^2 - p_{n+1} p_{n-1} - (-1)^{n+1}            (n >= 1)
//   catalan : p_n^2 - p_{n+r} p_{n-r} - (-1)^{n-r} p_r^2      (n >= r >= 0)
//   vajda   : p_{n+r} p_{n+s} - p_n p_{n+r+s} - (-1)^n p_r p_s
//   lucas   : p_{2n+1} - p_{n+1}^2 - p_n^2                    (n >= 0)
//   docagne : 2x p_{2n} - p_{n+1}^2 + p_{n-1}^2               (n >= 1)
enum class PellIdentity { Cassini, Catalan, Vajda, Lucas, DOcagne };

std::vector<PellIdentity> all_pell_identities();
std::string pell_identity_name(PellIdentity id);
std::size_t pell_identity_arity(PellIdentity id);
IntPoly pell_identity_residual(PellIdentity id, const std::vector<long long>& params);

// Symbolic two-digit pair hi.lo over a polynomial base: represents
// hi * base + lo. Digit-range validity is meaningless for polynomials and is
// enforced only when evaluating at an integer point.
struct PellDigitPair {
  IntPoly hi;
  IntPoly lo;
  IntPoly base;

  IntPoly value() const { return poly_add(poly_mul(hi, base), lo); }

  bool operator==(const PellDigitPair&) const = default;
};

// Fixed-point families (n >= 1):
//   a: p_{2n} . p_{4n-1}            over base p_{6n-2}
//   b: p_{2n} . p_{4n+1}            over base p_{6n+2}
//   c: p_{2n}p_{2n-1} . p_{2n+1}p_{2n-1} over base p_{4n}
enum class PellFixedVariant { A, B, C };

std::string pell_fixed_variant_name(PellFixedVariant variant);  // "a"/"b"/"c"

struct PellFixedPoint {
  PellFixedVariant variant;
  long n;
  PellDigitPair pair;
  IntPoly residual;  // hi^2 + lo^2 - hi*base - lo; zero polynomial
};

// Builds the pair and verifies the fixed-point residual is the zero
// polynomial (throws std::logic_error otherwise, which cannot happen).
PellFixedPoint pell_fixed_point(long n, PellFixedVariant variant);

// Cycle families over polynomial bases, mirroring the integer construction:
//   TypeI : N = 2n-1, base p_{N+1} = p_{2n}, start pair [0, N]
//   TypeII: N = 2n+1, base p_{N-1} = p_{2n}, start pair [2, N-2]
// The pair [r, s] carries digits p_r . p_s. Each step (wraparound included)
// is verified symbolically: hi^2 + lo^2 - next_hi*base - next_lo must be the
// zero polynomial. TypeII degenerates to a single fixed element at n = 2.
struct PellCycle {
  CycleKind kind;
  long n;
  IntPoly base;
  std::vector<IndexPair> pairs;
  std::vector<PellDigitPair> elements;
  std::vector<IntPoly> step_residuals;  // all zero polynomials
  bool fixed_point;
};

PellCycle pell_cycle(CycleKind kind, long n);  // n >= 2

// k-parameterized (arithmetic) cycle families. For each sampled integer k the
// digit and base polynomials are formed in x and the one-step residual
// x0^2 + x1^2 - y1*b - y0 is checked to be the zero polynomial.
//   TypeI : b = p_{N+1} + p_{N+2} k, x0 = p_i + p_{i+1} k, ... (0 <= i <= n-1)
//   TypeII: b = p_{N-1} + p_{N-2} k, x0 = p_i + p_{i-1} k, ... (1 <= i <= n)
// Requires at least 4 distinct samples: the residual has degree <= 2 in k, so
// vanishing at 3 distinct integers already forces it to vanish identically in
// k (Vandermonde); the fourth sample is margin.
struct PellArithReport {
  CycleKind kind;
  long n;
  long i;
  std::vector<long long> k_samples;
  std::vector<IntPoly> residuals;  // one per sample, all zero

  bool all_zero() const;
};

PellArithReport pell_arith_check(CycleKind kind, long n, long i,
                                 const std::vector<long long>& k_samples);

// k-parameterized fixed-point family (variant c extended):
//   u = p_{2n-1} + p_{2n} p_{2n+1} k,
//   p_{2n} u . p_{2n+1} u  is fixed over base p_{4n} + p_{2n+1} p_{4n+1} k.
// Same sampling contract as pell_arith_check.
struct PellArithFixedReport {
  long n;
  std::vector<long long> k_samples;
  std::vector<IntPoly> residuals;

  bool all_zero() const;
};

PellArithFixedReport pell_arith_fixed_check(long n, const std::vector<long long>& k_samples);

// Evaluates a polynomial cycle at an integer point x0 >= 1, validates every
// digit against the evaluated base, and cross-checks the resulting integer
// cycle against the orbit of its first element. Throws std::domain_error
// naming the offending element if a digit falls outside [0, base).
Cycle pell_evaluate_cycle(CycleKind kind, long n, const Bigint& x0);

}  // namespace ssd
