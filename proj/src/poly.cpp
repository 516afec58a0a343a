#include "ssd/poly.hpp"

#include <algorithm>

namespace ssd {

namespace {

void canonicalize(std::vector<Bigint>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPoly make_poly(std::vector<Bigint> coeffs) {
  canonicalize(coeffs);
  return IntPoly{std::move(coeffs)};
}

IntPoly poly_constant(const Bigint& c) { return make_poly({c}); }

IntPoly poly_monomial(const Bigint& c, std::size_t deg) {
  if (c == 0) return IntPoly{};
  std::vector<Bigint> coeffs(deg + 1, Bigint(0));
  coeffs[deg] = c;
  return IntPoly{std::move(coeffs)};
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  std::vector<Bigint> out(std::max(a.coeffs.size(), b.coeffs.size()), Bigint(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] += b.coeffs[i];
  canonicalize(out);
  return IntPoly{std::move(out)};
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  std::vector<Bigint> out(std::max(a.coeffs.size(), b.coeffs.size()), Bigint(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] -= b.coeffs[i];
  canonicalize(out);
  return IntPoly{std::move(out)};
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  std::vector<Bigint> out(a.coeffs.size() + b.coeffs.size() - 1, Bigint(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  canonicalize(out);
  return IntPoly{std::move(out)};
}

IntPoly poly_scale(const IntPoly& a, const Bigint& c) {
  if (c == 0) return IntPoly{};
  std::vector<Bigint> out = a.coeffs;
  for (Bigint& v : out) v *= c;
  return IntPoly{std::move(out)};
}

Bigint poly_eval(const IntPoly& a, const Bigint& x0) {
  Bigint acc = 0;
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) {
    acc = acc * x0 + *it;
  }
  return acc;
}

std::string poly_to_string(const IntPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (long d = a.degree(); d >= 0; --d) {
    const Bigint& c = a.coeffs[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const Bigint mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || d == 0) out += mag.str();
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace ssd
