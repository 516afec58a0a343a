#include "ssd/fib.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace ssd {

Bigint fib(std::size_t n) {
  static std::mutex guard;
  static std::deque<Bigint> table{0, 1};
  std::lock_guard<std::mutex> lock(guard);
  while (table.size() <= n) {
    const Bigint& a = table[table.size() - 2];
    const Bigint& b = table[table.size() - 1];
    table.push_back(a + b);
  }
  return table[n];
}

std::vector<FibIdentity> all_fib_identities() {
  return {FibIdentity::Cassini,     FibIdentity::Catalan,
          FibIdentity::Vajda,       FibIdentity::Lucas,
          FibIdentity::DOcagne,     FibIdentity::Prod3nMinus,
          FibIdentity::Prod3nPlus};
}

std::string fib_identity_name(FibIdentity id) {
  switch (id) {
    case FibIdentity::Cassini: return "cassini";
    case FibIdentity::Catalan: return "catalan";
    case FibIdentity::Vajda: return "vajda";
    case FibIdentity::Lucas: return "lucas";
    case FibIdentity::DOcagne: return "docagne";
    case FibIdentity::Prod3nMinus: return "prod3n_minus";
    case FibIdentity::Prod3nPlus: return "prod3n_plus";
  }
  throw std::logic_error("fib_identity_name: unknown identity");
}

std::size_t fib_identity_arity(FibIdentity id) {
  switch (id) {
    case FibIdentity::Catalan: return 2;
    case FibIdentity::Vajda: return 3;
    default: return 1;
  }
}

namespace {

inline Bigint sign_pow(long long exponent) {
  return (exponent % 2 == 0) ? Bigint(1) : Bigint(-1);
}

[[noreturn]] void bad_params(FibIdentity id, const char* why) {
  throw std::domain_error("fib_identity_residual(" + fib_identity_name(id) +
                          "): " + why);
}

}  // namespace

Bigint fib_identity_residual(FibIdentity id, const std::vector<long long>& params) {
  if (params.size() != fib_identity_arity(id))
    bad_params(id, "wrong number of parameters");
  for (long long p : params)
    if (p < 0) bad_params(id, "indices must be nonnegative");

  auto F = [](long long i) { return fib(std::size_t(i)); };

  switch (id) {
    case FibIdentity::Cassini: {
      long long n = params[0];
      if (n < 1) bad_params(id, "requires n >= 1");
      return F(n) * F(n) - (F(n - 1) * F(n + 1) - sign_pow(n));
    }
    case FibIdentity::Catalan: {
      long long n = params[0], r = params[1];
      if (n < r) bad_params(id, "requires n >= r");
      return F(n) * F(n) - (F(n + r) * F(n - r) + sign_pow(n - r) * F(r) * F(r));
    }
    case FibIdentity::Vajda: {
      long long n = params[0], r = params[1], s = params[2];
      return F(n + r) * F(n + s) -
             (F(n) * F(n + r + s) + sign_pow(n) * F(r) * F(s));
    }
    case FibIdentity::Lucas: {
      long long n = params[0];
      return F(2 * n + 1) - (F(n + 1) * F(n + 1) + F(n) * F(n));
    }
    case FibIdentity::DOcagne: {
      long long n = params[0];
      if (n < 1) bad_params(id, "requires n >= 1");
      return F(2 * n) - (F(n + 1) * F(n + 1) - F(n - 1) * F(n - 1));
    }
    case FibIdentity::Prod3nMinus: {
      long long n = params[0];
      if (n < 1) bad_params(id, "requires n >= 1");
      return F(2 * n + 1) * F(4 * n - 1) -
             (F(3 * n) * F(3 * n) + F(n - 1) * F(n - 1));
    }
    case FibIdentity::Prod3nPlus: {
      long long n = params[0];
      if (n < 1) bad_params(id, "requires n >= 1");
      return F(2 * n - 1) * F(4 * n + 1) -
             (F(3 * n) * F(3 * n) + F(n + 1) * F(n + 1));
    }
  }
  throw std::logic_error("fib_identity_residual: unknown identity");
}

std::pair<long, long> type1_step(long N, long i) {
  if (N < 1 || N % 2 == 0) throw std::domain_error("type1_step: N must be odd, N >= 1");
  long n = (N + 1) / 2;
  if (i < 0 || i > n - 1)
    throw std::domain_error("type1_step: i out of range [0, n-1]");
  long j = std::min(i, N - i);
  std::pair<long, long> out{N - (2 * j + 1), 2 * j + 1};
  Bigint lhs = fib(N - i) * fib(N - i) + fib(i) * fib(i);
  Bigint rhs = fib(out.first) * fib(N + 1) + fib(out.second);
  if (lhs != rhs) throw std::logic_error("type1_step: resolution identity failed");
  return out;
}

std::pair<long, long> type2_step(long N, long i) {
  if (N < 3 || N % 2 == 0) throw std::domain_error("type2_step: N must be odd, N >= 3");
  long n = (N - 1) / 2;
  if (i < 1 || i > n + 1)
    throw std::domain_error("type2_step: i out of range [1, n+1]");
  long j = std::min(i, N - i);
  std::pair<long, long> out{N - (2 * j - 1), 2 * j - 1};
  Bigint lhs = fib(N - i) * fib(N - i) + fib(i) * fib(i);
  Bigint rhs = fib(out.first) * fib(N - 1) + fib(out.second);
  if (lhs != rhs) throw std::logic_error("type2_step: resolution identity failed");
  return out;
}

}  // namespace ssd
