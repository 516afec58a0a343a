#pragma once

#include <cstddef>
#include <vector>

#include "ssd/bigint.hpp"

namespace ssd {

// A cycle of S_b in standard form: least element first, then cyclic order.
// Length 1 means a fixed point (enumerate_cycles never reports those).
struct Cycle {
  Bigint base;
  std::vector<Bigint> elements;

  std::size_t length() const { return elements.size(); }
  bool operator==(const Cycle&) const = default;
};

// Rotates an S_b-ordered element list so the least element comes first.
std::vector<Bigint> standard_form(std::vector<Bigint> elements);

// Forward orbit of seed under S_b until a value repeats. tail is the
// pre-periodic prefix starting at seed; when the seed already lies on the
// cycle the tail is just [seed] (the one case where the two overlap).
struct OrbitRecord {
  Bigint base;
  Bigint seed;
  std::vector<Bigint> tail;
  Cycle cycle;
};

// Requires seed >= 1, base >= 2.
OrbitRecord orbit(const Bigint& seed, const Bigint& base);

// All cycles of length >= 2, found by exhausting seeds in {1, ..., 2b^2 - 1}
// (every cycle element is below 2b^2). Sorted by least element. jobs > 1
// partitions the seed range; results are identical for any worker count.
std::vector<Cycle> enumerate_cycles(const Bigint& base, unsigned jobs = 1);

// All n in {1, ..., b^2 - 1} with S_b(n) = n, ascending. The trivial fixed
// point 1 is included.
std::vector<Bigint> enumerate_fixed_points_bruteforce(const Bigint& base);

}  // namespace ssd
