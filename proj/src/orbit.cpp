#include "ssd/orbit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "ssd/digits.hpp"

namespace ssd {

std::vector<Bigint> standard_form(std::vector<Bigint> elements) {
  if (elements.empty()) return elements;
  auto least = std::min_element(elements.begin(), elements.end());
  std::rotate(elements.begin(), least, elements.end());
  return elements;
}

OrbitRecord orbit(const Bigint& seed, const Bigint& base) {
  if (base < 2) throw std::domain_error("orbit: base must be >= 2");
  if (seed < 1) throw std::domain_error("orbit: seed must be >= 1");

  // Guard, not a bound that is ever reached: values with four or more digits
  // strictly shrink in digit count, and there are fewer than 4b^2 values with
  // at most three digits, so a repeat occurs well before this.
  const Bigint cap = Bigint(digit_count(seed, base)) + 4 * base * base;

  std::vector<Bigint> seq;
  Bigint cur = seed;
  for (Bigint step = 0; step <= cap; ++step) {
    auto hit = std::find(seq.begin(), seq.end(), cur);
    if (hit != seq.end()) {
      std::vector<Bigint> cyc(hit, seq.end());
      std::vector<Bigint> tail(seq.begin(), hit);
      if (tail.empty()) tail.push_back(seed);
      return OrbitRecord{base, seed, std::move(tail),
                         Cycle{base, standard_form(std::move(cyc))}};
    }
    seq.push_back(cur);
    cur = sum_square_digits(cur, base);
  }
  throw std::logic_error("orbit: iteration guard exceeded");
}

namespace {

// Seed-range worker over word-sized values. Repeat detection is a linear scan
// of the trajectory; trajectories here are a few dozen entries at most.
void collect_cycles_u64(std::uint64_t b, std::uint64_t lo, std::uint64_t hi,
                        std::set<std::vector<std::uint64_t>>& out) {
  std::vector<std::uint64_t> seq;
  for (std::uint64_t seed = lo; seed <= hi; ++seed) {
    seq.clear();
    std::uint64_t cur = seed;
    for (;;) {
      auto hit = std::find(seq.begin(), seq.end(), cur);
      if (hit != seq.end()) {
        if (seq.end() - hit >= 2) {
          std::vector<std::uint64_t> cyc(hit, seq.end());
          auto least = std::min_element(cyc.begin(), cyc.end());
          std::rotate(cyc.begin(), least, cyc.end());
          out.insert(std::move(cyc));
        }
        break;
      }
      seq.push_back(cur);
      cur = detail::sum_square_digits_u64(cur, b);
    }
  }
}

std::vector<Cycle> enumerate_cycles_u64(const Bigint& base, unsigned jobs) {
  const std::uint64_t b = to_u64(base);
  const std::uint64_t bound = 2 * b * b - 1;
  jobs = std::max(1u, jobs);
  if (Bigint(jobs) > bound) jobs = 1;

  std::vector<std::set<std::vector<std::uint64_t>>> found(jobs);
  if (jobs == 1) {
    collect_cycles_u64(b, 1, bound, found[0]);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = bound / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      std::uint64_t lo = 1 + w * chunk;
      std::uint64_t hi = (w + 1 == jobs) ? bound : (w + 1) * chunk;
      workers.emplace_back(collect_cycles_u64, b, lo, hi, std::ref(found[w]));
    }
    for (auto& t : workers) t.join();
  }

  std::set<std::vector<std::uint64_t>> merged;
  for (auto& part : found) merged.merge(part);

  std::vector<Cycle> out;
  for (const auto& cyc : merged) {
    Cycle c{base, {}};
    c.elements.assign(cyc.begin(), cyc.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b2) {
    return a.elements.front() < b2.elements.front();
  });
  return out;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Bigint& base, unsigned jobs) {
  if (base < 2) throw std::domain_error("enumerate_cycles: base must be >= 2");
  if (base < detail::kSmallBaseLimit) return enumerate_cycles_u64(base, jobs);

  // Arbitrary-precision fallback; only sensible for desk-scale bases anyway.
  std::set<std::vector<Bigint>> merged;
  const Bigint bound = 2 * base * base - 1;
  for (Bigint seed = 1; seed <= bound; ++seed) {
    OrbitRecord rec = orbit(seed, base);
    if (rec.cycle.length() >= 2) merged.insert(rec.cycle.elements);
  }
  std::vector<Cycle> out;
  for (const auto& cyc : merged) out.push_back(Cycle{base, cyc});
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b2) {
    return a.elements.front() < b2.elements.front();
  });
  return out;
}

std::vector<Bigint> enumerate_fixed_points_bruteforce(const Bigint& base) {
  if (base < 2)
    throw std::domain_error("enumerate_fixed_points_bruteforce: base must be >= 2");
  std::vector<Bigint> out;
  if (base < detail::kSmallBaseLimit) {
    const std::uint64_t b = to_u64(base);
    for (std::uint64_t n = 1; n < b * b; ++n)
      if (detail::sum_square_digits_u64(n, b) == n) out.push_back(n);
    return out;
  }
  for (Bigint n = 1; n < base * base; ++n)
    if (sum_square_digits(n, base) == n) out.push_back(n);
  return out;
}

}  // namespace ssd
