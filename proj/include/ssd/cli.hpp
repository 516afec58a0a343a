#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssd/bigint.hpp"
#include "ssd/pairs.hpp"
#include "ssd/report.hpp"

namespace ssd {

// Raised when a command declines an over-large workload instead of running
// it; mapped to exit code 3 by the command-line driver.
struct WorkloadRefused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  long max_n = 0;     // 0: per-suite default
  long max_base = 0;  // 0: per-suite default
  long max_k = 5;
  unsigned jobs = 1;
  std::uint64_t seed = 0;  // drives the randomized large-index spot checks
};

// Forward orbit of n under the base-b squared-digit-sum map: the pre-periodic
// tail and the cycle it lands on, each element with its digit expansion.
Report cmd_orbit(const Bigint& n, const Bigint& base);

// Complete classification of one base: every fixed point (structural solution
// of the two-square equation, cross-checked against brute force and the
// divisor-count formula) and every cycle in standard form. Refuses bases
// above `cap` (throws WorkloadRefused).
Report cmd_classify(const Bigint& base, const Bigint& cap, unsigned jobs);

// Named checker suites over the whole library; names listed by
// verify_suite_names(), plus "all" for every suite in order.
Report cmd_verify(const std::string& suite, const VerifyOptions& options);
std::vector<std::string> verify_suite_names();

// Regenerates one of the embedded reference tables from first principles and
// diffs it line by line against the checked-in fixture.
// which: table1 | table2 | table3 | table4 | table5 | base12.
Report cmd_tables(const std::string& which);
std::vector<std::string> table_names();

// Lists companion-base constructions (same value fixed in two bases with its
// two digits swapped) for every family over n <= max_n, k <= max_k.
Report cmd_companion(long max_n, long max_k);

// Orbit decomposition of the index-pair family P_+(N) or P_-(N) under the
// corresponding index map: cycles first, then fixed points.
Report cmd_psi(long N, Sign sign);

// The polynomial sequence p_0 = 0, p_1 = 1, p_n = 2x p_{n-1} + p_{n-2} up to
// max_n, optionally evaluated at x.
Report cmd_pell(long max_n, bool has_x, const Bigint& x);

// Full command-line driver. Returns the process exit code:
// 0 success, 1 verification failure, 2 usage error, 3 refused workload.
int run_cli(int argc, const char* const* argv);

}  // namespace ssd
