#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace ssd {

// All public arithmetic is exact. Bigint is the only integer type that crosses
// module boundaries; narrow fast paths stay internal to an implementation.
using Bigint = boost::multiprecision::cpp_int;

inline Bigint isqrt(const Bigint& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Bigint& n) {
  if (n < 0) return false;
  Bigint r = isqrt(n);
  return r * r == n;
}

inline bool fits_u64(const Bigint& n) {
  return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max();
}

inline std::uint64_t to_u64(const Bigint& n) {
  return n.convert_to<std::uint64_t>();
}

inline std::string str(const Bigint& n) { return n.str(); }

}  // namespace ssd
