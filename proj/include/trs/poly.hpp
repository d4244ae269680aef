#pragma once

#include <span>
#include <utility>
#include <vector>

#include "trs/galois.hpp"

namespace trs {

/// Univariate polynomial, coefficient of x^i at index i. Trailing zeros are
/// allowed; use trimmed() where a normal form matters.
using Poly = std::vector<Elem>;

namespace poly {

Poly trimmed(Poly a);
/// -1 for the zero polynomial.
int degree(const Poly& a);
Elem coeff(const Poly& a, std::size_t i);
Elem eval(const Field& f, const Poly& a, Elem x);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, const Poly& a, Elem s);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
/// prod (x - r) over the roots.
Poly from_roots(const Field& f, std::span<const Elem> roots);
/// Lagrange interpolation through (xs[i], ys[i]); xs distinct.
Poly interpolate(const Field& f, std::span<const Elem> xs, std::span<const Elem> ys);

}  // namespace poly
}  // namespace trs
