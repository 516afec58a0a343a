#pragma once

#include <string>
#include <vector>

#include "ssd/bigint.hpp"

namespace ssd {

// Dense univariate polynomial with exact integer coefficients.
// coeffs[i] multiplies x^i; canonical form has no trailing zero coefficients,
// so the zero polynomial is the empty list.
struct IntPoly {
  std::vector<Bigint> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }  // -1 for zero

  // Coefficient of x^i, 0 beyond the stored degree.
  Bigint coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Bigint(0); }

  bool operator==(const IntPoly&) const = default;
};

// Canonicalizes (strips trailing zeros).
IntPoly make_poly(std::vector<Bigint> coeffs);
IntPoly poly_constant(const Bigint& c);
IntPoly poly_monomial(const Bigint& c, std::size_t deg);

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const IntPoly& a, const Bigint& c);

// Horner evaluation, exact.
Bigint poly_eval(const IntPoly& a, const Bigint& x0);

// Human-readable form, highest degree first: "16x^4 + 12x^2 + 1", "2x", "0".
std::string poly_to_string(const IntPoly& a);

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) { return poly_add(a, b); }
inline IntPoly operator-(const IntPoly& a, const IntPoly& b) { return poly_sub(a, b); }
inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return poly_mul(a, b); }

}  // namespace ssd
