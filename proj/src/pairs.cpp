#include "ssd/pairs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ssd {

namespace {

void require_odd(long N, const char* who) {
  if (N < 1 || N % 2 == 0) {
    throw std::domain_error(std::string(who) + ": N must be a positive odd integer");
  }
}

long min_even_component(Sign sign) { return sign == Sign::Plus ? 0 : 2; }

void require_member(long N, Sign sign, IndexPair p, const char* who) {
  if (!pair_in_family(N, sign, p)) {
    throw std::domain_error(std::string(who) + ": pair [" + std::to_string(p.r) + "," +
                            std::to_string(p.s) + "] is not in the " + sign_name(sign) +
                            " family for N=" + std::to_string(N));
  }
}

}  // namespace

std::string sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

bool pair_in_family(long N, Sign sign, IndexPair p) {
  if (N < 1 || N % 2 == 0) return false;
  return p.r + p.s == N && p.r % 2 == 0 && p.s % 2 == 1 && p.r >= min_even_component(sign) &&
         p.s >= 1;
}

std::vector<IndexPair> pair_family(long N, Sign sign) {
  require_odd(N, "pair_family");
  if (sign == Sign::Minus && N < 3) {
    throw std::domain_error("pair_family: the minus family needs N >= 3");
  }
  std::vector<IndexPair> out;
  for (long r = min_even_component(sign); r < N; r += 2) {
    out.push_back({r, N - r});
  }
  return out;
}

IndexPair psi_plus(long N, IndexPair p) {
  require_odd(N, "psi_plus");
  require_member(N, Sign::Plus, p, "psi_plus");
  const long t = std::min(p.r, p.s);
  return {N - (2 * t + 1), 2 * t + 1};
}

IndexPair psi_minus(long N, IndexPair p) {
  require_odd(N, "psi_minus");
  if (N < 3) throw std::domain_error("psi_minus: N must be at least 3");
  require_member(N, Sign::Minus, p, "psi_minus");
  const long t = std::min(p.r, p.s);
  return {N - (2 * t - 1), 2 * t - 1};
}

IndexPair psi(long N, Sign sign, IndexPair p) {
  return sign == Sign::Plus ? psi_plus(N, p) : psi_minus(N, p);
}

PairDecomposition decompose(long N, Sign sign) {
  const std::vector<IndexPair> family = pair_family(N, sign);
  PairDecomposition out{N, sign, {}, {}};
  std::set<IndexPair> visited;
  // Seeds are taken in ascending r. Every pair with a smaller first component
  // than the seed is already visited, so each orbit is discovered at its
  // least-r element; cycles therefore come out ordered by least r and rotated
  // to start there.
  for (const IndexPair& seed : family) {
    if (visited.count(seed)) continue;
    std::vector<IndexPair> orbit{seed};
    visited.insert(seed);
    for (IndexPair cur = psi(N, sign, seed); cur != seed; cur = psi(N, sign, cur)) {
      orbit.push_back(cur);
      visited.insert(cur);
    }
    if (orbit.size() == 1) {
      out.fixed_points.push_back(seed);
    } else {
      out.cycles.push_back(std::move(orbit));
    }
  }
  return out;
}

std::vector<IsolatedPair> isolated_pair_fixed_points(long n) {
  if (n < 1) throw std::domain_error("isolated_pair_fixed_points: n must be at least 1");
  const std::vector<IsolatedPair> out{
      {Sign::Minus, 6 * n - 1, {2 * n, 4 * n - 1}},
      {Sign::Minus, 2 * n + 1, {2 * n, 1}},
      {Sign::Plus, 6 * n + 1, {2 * n, 4 * n + 1}},
  };
  for (const IsolatedPair& ip : out) {
    if (psi(ip.N, ip.sign, ip.pair) != ip.pair) {
      throw std::logic_error("isolated_pair_fixed_points: family member is not fixed");
    }
    for (const IndexPair& q : pair_family(ip.N, ip.sign)) {
      if (q != ip.pair && psi(ip.N, ip.sign, q) == ip.pair) {
        throw std::logic_error("isolated_pair_fixed_points: fixed point has a preimage");
      }
    }
  }
  return out;
}

}  // namespace ssd
