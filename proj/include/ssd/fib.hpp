#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ssd/bigint.hpp"

namespace ssd {

// F_0 = 0, F_1 = 1. Backed by a table; safe to call concurrently.
Bigint fib(std::size_t n);

enum class FibIdentity {
  Cassini,      // F_n^2 = F_{n-1} F_{n+1} - (-1)^n,            n >= 1
  Catalan,      // F_n^2 = F_{n+r} F_{n-r} + (-1)^{n-r} F_r^2,  n >= r >= 0
  Vajda,        // F_{n+r} F_{n+s} = F_n F_{n+r+s} + (-1)^n F_r F_s
  Lucas,        // F_{2n+1} = F_{n+1}^2 + F_n^2
  DOcagne,      // F_{2n} = F_{n+1}^2 - F_{n-1}^2,              n >= 1
  Prod3nMinus,  // F_{2n+1} F_{4n-1} = F_{3n}^2 + F_{n-1}^2,    n >= 1
  Prod3nPlus,   // F_{2n-1} F_{4n+1} = F_{3n}^2 + F_{n+1}^2,    n >= 1
};

std::vector<FibIdentity> all_fib_identities();
std::string fib_identity_name(FibIdentity id);
std::size_t fib_identity_arity(FibIdentity id);  // 1 for (n), 2 for (n,r), 3 for (n,r,s)

// LHS - RHS, exactly; zero iff the identity instance holds.
// Throws std::domain_error on wrong arity or an out-of-range index.
Bigint fib_identity_residual(FibIdentity id, const std::vector<long long>& params);

// Digit pair (hi index, lo index) such that, in base F_{N+1},
//   F_{N-i}^2 + F_i^2 = F_{N-(2j+1)} * F_{N+1} + F_{2j+1},  j = min(i, N-i).
// N = 2n-1 odd, 0 <= i <= n-1. The identity is re-checked exactly.
std::pair<long, long> type1_step(long N, long i);

// Same in base F_{N-1}:
//   F_{N-i}^2 + F_i^2 = F_{N-(2j-1)} * F_{N-1} + F_{2j-1},  j = min(i, N-i).
// N = 2n+1 odd, 1 <= i <= n+1.
std::pair<long, long> type2_step(long N, long i);

}  // namespace ssd
