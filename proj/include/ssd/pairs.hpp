#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ssd {

enum class Sign { Plus, Minus };

std::string sign_name(Sign s);  // "plus" / "minus"

// [r, s] with r + s = N, r even, s odd. The plus family admits r >= 0;
// the minus family requires r >= 2.
struct IndexPair {
  long r;
  long s;

  bool operator==(const IndexPair&) const = default;
  auto operator<=>(const IndexPair&) const = default;
};

bool pair_in_family(long N, Sign sign, IndexPair p);

// All family members, ascending in r. N odd; N >= 1 (plus), N >= 3 (minus).
// |family(2n-1, plus)| = n and |family(2n+1, minus)| = n.
std::vector<IndexPair> pair_family(long N, Sign sign);

// psi_+([r,s]) = [N-(2t+1), 2t+1], t = min(r,s). Closed on the plus family.
IndexPair psi_plus(long N, IndexPair p);

// psi_-([r,s]) = [N-(2t-1), 2t-1], t = min(r,s). Closed on the minus family.
IndexPair psi_minus(long N, IndexPair p);

IndexPair psi(long N, Sign sign, IndexPair p);

// Full orbit partition of the family. Cycles (length >= 2) come first,
// ordered by their least first component and starting at it; the fundamental
// cycle (through [0,N] resp. [2,N-2]) is automatically first. Fixed points
// follow, ascending in r.
struct PairDecomposition {
  long N;
  Sign sign;
  std::vector<std::vector<IndexPair>> cycles;
  std::vector<IndexPair> fixed_points;
};

PairDecomposition decompose(long N, Sign sign);

// The three one-parameter families of psi fixed points:
//   [2n, 4n-1] under psi_- at N = 6n-1,
//   [2n, 1]    under psi_- at N = 2n+1,
//   [2n, 4n+1] under psi_+ at N = 6n+1.
// Each is verified fixed and preimage-free within its family (isolated).
struct IsolatedPair {
  Sign sign;
  long N;
  IndexPair pair;

  bool operator==(const IsolatedPair&) const = default;
};

std::vector<IsolatedPair> isolated_pair_fixed_points(long n);  // n >= 1

}  // namespace ssd
