#pragma once
// ============================================================================
// Polynomial gcd over Q in any subset of the variable alphabet.
// Subresultant polynomial remainder sequences with recursive content
// management; the result is primitive with positive leading coefficient in
// graded-lex order (gcd of zero polynomials is zero).
// ============================================================================

#include "cubiclines/poly.hpp"

namespace cubiclines {

Poly gcd_poly(const Poly& f, const Poly& g);

// gcd of the v-coefficients (a polynomial in the other variables)
Poly content_wrt(const Poly& f, Var v);
Poly primitive_part_wrt(const Poly& f, Var v);

// f / gcd(f, df/dv) for each variable in turn: the squarefree part
Poly squarefree_part(const Poly& f);

} // namespace cubiclines
