#include "ssd/pell.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>

#include "ssd/digits.hpp"

namespace ssd {

namespace {

IntPoly P(long index) {
  if (index < 0) throw std::logic_error("pell: negative index");
  return pell(static_cast<std::size_t>(index));
}

IntPoly sign_unit(long long exponent) {
  return poly_constant(exponent % 2 == 0 ? 1 : -1);
}

void require_arity(PellIdentity id, const std::vector<long long>& params, const char* who) {
  if (params.size() != pell_identity_arity(id)) {
    throw std::domain_error(std::string(who) + ": " + pell_identity_name(id) + " takes " +
                            std::to_string(pell_identity_arity(id)) + " parameter(s)");
  }
}

// Digit polynomial p_index + p_{index+shift} * k with the integer k folded
// into the coefficients.
IntPoly shifted_digit(long index, long shift, long long k) {
  return poly_add(P(index), poly_scale(P(index + shift), k));
}

void require_samples(const std::vector<long long>& k_samples, const char* who) {
  const std::set<long long> distinct(k_samples.begin(), k_samples.end());
  if (distinct.size() < 4) {
    throw std::domain_error(std::string(who) + ": need at least 4 distinct k samples");
  }
}

}  // namespace

IntPoly pell(std::size_t n) {
  static std::mutex mutex;
  static std::deque<IntPoly> table{IntPoly{}, poly_constant(1)};
  const IntPoly two_x = poly_monomial(2, 1);

  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= n) {
    table.push_back(poly_add(poly_mul(two_x, table[table.size() - 1]), table[table.size() - 2]));
  }
  return table[n];
}

std::vector<PellIdentity> all_pell_identities() {
  return {PellIdentity::Cassini, PellIdentity::Catalan, PellIdentity::Vajda, PellIdentity::Lucas,
          PellIdentity::DOcagne};
}

std::string pell_identity_name(PellIdentity id) {
  switch (id) {
    case PellIdentity::Cassini: return "cassini";
    case PellIdentity::Catalan: return "catalan";
    case PellIdentity::Vajda: return "vajda";
    case PellIdentity::Lucas: return "lucas";
    case PellIdentity::DOcagne: return "docagne";
  }
  throw std::logic_error("pell_identity_name: unknown identity");
}

std::size_t pell_identity_arity(PellIdentity id) {
  switch (id) {
    case PellIdentity::Catalan: return 2;
    case PellIdentity::Vajda: return 3;
    default: return 1;
  }
}

IntPoly pell_identity_residual(PellIdentity id, const std::vector<long long>& params) {
  require_arity(id, params, "pell_identity_residual");
  for (long long p : params) {
    if (p < 0) throw std::domain_error("pell_identity_residual: negative index");
  }
  switch (id) {
    case PellIdentity::Cassini: {
      const long long n = params[0];
      if (n < 1) throw std::domain_error("pell_identity_residual: cassini needs n >= 1");
      return P(n) * P(n) - P(n + 1) * P(n - 1) - sign_unit(n + 1);
    }
    case PellIdentity::Catalan: {
      const long long n = params[0], r = params[1];
      if (r > n) throw std::domain_error("pell_identity_residual: catalan needs r <= n");
      return P(n) * P(n) - P(n + r) * P(n - r) - sign_unit(n - r) * P(r) * P(r);
    }
    case PellIdentity::Vajda: {
      const long long n = params[0], r = params[1], s = params[2];
      return P(n + r) * P(n + s) - P(n) * P(n + r + s) - sign_unit(n) * P(r) * P(s);
    }
    case PellIdentity::Lucas: {
      const long long n = params[0];
      return P(2 * n + 1) - P(n + 1) * P(n + 1) - P(n) * P(n);
    }
    case PellIdentity::DOcagne: {
      const long long n = params[0];
      if (n < 1) throw std::domain_error("pell_identity_residual: docagne needs n >= 1");
      return poly_monomial(2, 1) * P(2 * n) - P(n + 1) * P(n + 1) + P(n - 1) * P(n - 1);
    }
  }
  throw std::logic_error("pell_identity_residual: unknown identity");
}

std::string pell_fixed_variant_name(PellFixedVariant variant) {
  switch (variant) {
    case PellFixedVariant::A: return "a";
    case PellFixedVariant::B: return "b";
    case PellFixedVariant::C: return "c";
  }
  throw std::logic_error("pell_fixed_variant_name: unknown variant");
}

PellFixedPoint pell_fixed_point(long n, PellFixedVariant variant) {
  if (n < 1) throw std::domain_error("pell_fixed_point: n must be at least 1");
  PellDigitPair pair;
  switch (variant) {
    case PellFixedVariant::A:
      pair = {P(2 * n), P(4 * n - 1), P(6 * n - 2)};
      break;
    case PellFixedVariant::B:
      pair = {P(2 * n), P(4 * n + 1), P(6 * n + 2)};
      break;
    case PellFixedVariant::C:
      pair = {P(2 * n) * P(2 * n - 1), P(2 * n + 1) * P(2 * n - 1), P(4 * n)};
      break;
  }
  const IntPoly residual = pair.hi * pair.hi + pair.lo * pair.lo - pair.hi * pair.base - pair.lo;
  if (!residual.is_zero()) {
    throw std::logic_error("pell_fixed_point: nonzero residual for variant " +
                           pell_fixed_variant_name(variant));
  }
  return {variant, n, pair, residual};
}

PellCycle pell_cycle(CycleKind kind, long n) {
  if (n < 2) throw std::domain_error("pell_cycle: n must be at least 2");
  const bool type1 = kind == CycleKind::TypeI;
  const long N = type1 ? 2 * n - 1 : 2 * n + 1;
  const Sign sign = type1 ? Sign::Plus : Sign::Minus;
  const IndexPair start = type1 ? IndexPair{0, N} : IndexPair{2, N - 2};

  PellCycle out;
  out.kind = kind;
  out.n = n;
  out.base = P(2 * n);  // p_{N+1} for TypeI, p_{N-1} for TypeII

  out.pairs.push_back(start);
  for (IndexPair cur = psi(N, sign, start); cur != start; cur = psi(N, sign, cur)) {
    out.pairs.push_back(cur);
  }
  out.fixed_point = out.pairs.size() == 1;

  for (const IndexPair& p : out.pairs) {
    out.elements.push_back({P(p.r), P(p.s), out.base});
  }

  for (std::size_t idx = 0; idx < out.elements.size(); ++idx) {
    const PellDigitPair& from = out.elements[idx];
    const PellDigitPair& to = out.elements[(idx + 1) % out.elements.size()];
    const IntPoly residual =
        from.hi * from.hi + from.lo * from.lo - to.hi * to.base - to.lo;
    if (!residual.is_zero()) {
      throw std::logic_error("pell_cycle: nonzero step residual at index " + std::to_string(idx));
    }
    out.step_residuals.push_back(residual);
  }

  const bool even = n % 2 == 0;
  const IndexPair expected_terminal =
      type1 ? (even ? IndexPair{n, n - 1} : IndexPair{n - 1, n})
            : (even ? IndexPair{n, n + 1} : IndexPair{n + 1, n});
  if (out.pairs.back() != expected_terminal) {
    throw std::logic_error("pell_cycle: unexpected terminal pair for n=" + std::to_string(n));
  }
  return out;
}

bool PellArithReport::all_zero() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const IntPoly& r) { return r.is_zero(); });
}

bool PellArithFixedReport::all_zero() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const IntPoly& r) { return r.is_zero(); });
}

PellArithReport pell_arith_check(CycleKind kind, long n, long i,
                                 const std::vector<long long>& k_samples) {
  if (n < 1) throw std::domain_error("pell_arith_check: n must be at least 1");
  const bool type1 = kind == CycleKind::TypeI;
  if (type1 ? (i < 0 || i > n - 1) : (i < 1 || i > n)) {
    throw std::domain_error("pell_arith_check: index i out of range");
  }
  require_samples(k_samples, "pell_arith_check");
  const long N = type1 ? 2 * n - 1 : 2 * n + 1;

  PellArithReport report{kind, n, i, k_samples, {}};
  // The residual is a polynomial of degree <= 2 in k whose coefficients are
  // integer polynomials in x: every term is a product of two expressions that
  // are each linear in k. A degree-2 polynomial vanishing at 3 distinct
  // integers is identically zero (Vandermonde), so zero residuals at the >= 4
  // distinct samples below prove the identity for ALL k simultaneously.
  for (long long k : k_samples) {
    IntPoly x0, x1, y0, y1, b;
    if (type1) {
      b = shifted_digit(N + 1, 1, k);
      x0 = shifted_digit(i, 1, k);
      x1 = shifted_digit(N - i, 1, k);
      y0 = shifted_digit(2 * i + 1, 1, k);
      y1 = shifted_digit(N - (2 * i + 1), 1, k);
    } else {
      b = shifted_digit(N - 1, -1, k);
      x0 = shifted_digit(i, -1, k);
      x1 = shifted_digit(N - i, -1, k);
      y0 = shifted_digit(2 * i - 1, -1, k);
      y1 = shifted_digit(N - (2 * i - 1), -1, k);
    }
    report.residuals.push_back(x0 * x0 + x1 * x1 - y1 * b - y0);
  }
  return report;
}

PellArithFixedReport pell_arith_fixed_check(long n, const std::vector<long long>& k_samples) {
  if (n < 1) throw std::domain_error("pell_arith_fixed_check: n must be at least 1");
  require_samples(k_samples, "pell_arith_fixed_check");

  PellArithFixedReport report{n, k_samples, {}};
  // Same sampling argument as pell_arith_check: degree <= 2 in k, >= 4
  // distinct zero samples prove the identity in k identically.
  for (long long k : k_samples) {
    const IntPoly u = poly_add(P(2 * n - 1), poly_scale(P(2 * n) * P(2 * n + 1), k));
    const IntPoly hi = P(2 * n) * u;
    const IntPoly lo = P(2 * n + 1) * u;
    const IntPoly b = poly_add(P(4 * n), poly_scale(P(2 * n + 1) * P(4 * n + 1), k));
    report.residuals.push_back(hi * hi + lo * lo - hi * b - lo);
  }
  return report;
}

Cycle pell_evaluate_cycle(CycleKind kind, long n, const Bigint& x0) {
  if (x0 < 1) throw std::domain_error("pell_evaluate_cycle: x0 must be at least 1");
  const PellCycle sym = pell_cycle(kind, n);
  const Bigint base = poly_eval(sym.base, x0);
  if (base < 2) throw std::domain_error("pell_evaluate_cycle: evaluated base is below 2");

  std::vector<Bigint> values;
  for (std::size_t idx = 0; idx < sym.elements.size(); ++idx) {
    const Bigint hi = poly_eval(sym.elements[idx].hi, x0);
    const Bigint lo = poly_eval(sym.elements[idx].lo, x0);
    if (hi < 0 || hi >= base || lo < 0 || lo >= base) {
      throw std::domain_error("pell_evaluate_cycle: digits of element " + std::to_string(idx) +
                              " (indices [" + std::to_string(sym.pairs[idx].r) + "," +
                              std::to_string(sym.pairs[idx].s) + "]) fall outside the base");
    }
    values.push_back(hi * base + lo);
  }

  // Cross-check against the raw dynamics: the orbit of the first element must
  // consist of exactly this cycle.
  const OrbitRecord record = orbit(values.front(), base);
  const Cycle result{base, standard_form(values)};
  if (record.cycle.elements != result.elements ||
      record.tail != std::vector<Bigint>{values.front()}) {
    throw std::logic_error("pell_evaluate_cycle: evaluated values disagree with the orbit");
  }
  return result;
}

}  // namespace ssd
