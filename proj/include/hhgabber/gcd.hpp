#pragma once

#include "hhgabber/polynomial.hpp"

namespace hhgabber {

/// Quotient f/g when the division is exact; throws std::domain_error
/// otherwise.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Monic (grevlex) gcd, by content/primitive-part recursion one variable at
/// a time with a primitive pseudo-remainder sequence. Not optimized; fine at
/// the degrees this library meets.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

/// Generator of the radical of (f): f / gcd(f, df/dx_1, ..., df/dx_n),
/// normalized monic. Characteristic 0 only, which is all this library has.
Polynomial squarefree_part(const Polynomial& f);

}  // namespace hhgabber
