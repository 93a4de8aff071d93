#ifndef DBX_POLYALG_HPP
#define DBX_POLYALG_HPP

#include <dbx/bipoly.hpp>
#include <dbx/upoly.hpp>

#include <optional>

namespace dbx {

/// Z[Y][X]: polynomial in X whose coefficients are integer polynomials in Y.
using RecPoly = UPoly<UPolyZ>;

/// Requires integer coefficients.
RecPoly to_recursive(const BiPoly& f);
BiPoly from_recursive(const RecPoly& f);

/// Univariate views: polynomials in one variable only.
BiPoly from_univariate_x(const UPolyQ& f);
BiPoly from_univariate_y(const UPolyQ& f);
/// Requires f to involve X only.
UPolyQ to_univariate_x(const BiPoly& f);
/// Requires f to involve Y only.
UPolyQ to_univariate_y(const BiPoly& f);
UPolyZ to_integer_poly(const UPolyQ& f);
UPolyQ to_rational_poly(const UPolyZ& f);

/// Returns q with num = q * den, or nullopt when den does not divide num.
/// Throws std::invalid_argument for den = 0.
std::optional<BiPoly> exact_divide(const BiPoly& num, const BiPoly& den);

/// Primitive gcd, positive leading coefficient in cantor order.
/// Throws std::invalid_argument when both inputs are zero.
BiPoly poly_gcd(const BiPoly& a, const BiPoly& b);

/// f(X + x0, Y + y0).
BiPoly shift(const BiPoly& f, const Integer& x0, const Integer& y0);

/// f(Y, X).
BiPoly swap_variables(const BiPoly& f);

/// Largest e with g^e | f (f nonzero, g nonconstant).
unsigned multiplicity_of(const BiPoly& f, const BiPoly& g);

}  // namespace dbx

#endif  // DBX_POLYALG_HPP
