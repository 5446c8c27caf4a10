#pragma once

#include "bezout/polynomial.hpp"

#include <cstddef>
#include <string_view>

namespace bezout {

enum class ResultantPath {
    Auto,    ///< dense integer route when at most one variable remains
    Generic, ///< Bareiss over sparse polynomial entries, always
};

/// Sylvester resultant with respect to `var`. Rows hold the ascending
/// coefficient lists of p (deg q times) then q (deg p times), so
/// Res_y(x - y, x + y) = 2x. Throws DegreeZero, AmbientMismatch.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var,
                     ResultantPath path = ResultantPath::Auto);
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::string_view var,
                     ResultantPath path = ResultantPath::Auto);

/// Integer coefficients with gcd 1 and positive grlex-leading coefficient.
/// Zero stays zero.
Polynomial normalize(const Polynomial& p);

/// lc_var(b)^(deg a - deg b + 1) * a mod b, computed in K[other vars][var].
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

/// Normalized gcd of polynomials that together use at most two variables.
/// gcd(p, 0) = normalize(p). Throws UnsupportedArity, AmbientMismatch.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

} // namespace bezout
