#pragma once
// ============================================================================
// Determinantal elimination: fraction-free determinants, resultants and
// subresultants with respect to one variable.
//
// The k-th subresultant of f (degree n, coefficients a_0..a_n, a_0 leading)
// and g (degree m, coefficients b_0..b_m) is the (m+n-2k) x (m+n-2k)
// determinant with m-k rows of a's stacked from the top (row i carries
// a_{j-i} in column j) and n-k rows of b's stacked from the bottom (the
// bottom row carries b_j in column j, the row above it b_{j-1}, ...).
// The block of the higher-degree polynomial goes on top; this orientation
// is pinned by frozen fixtures.
// ============================================================================

#include <vector>

#include "cubiclines/poly.hpp"

namespace cubiclines {

// fraction-free (Bareiss) determinant; entries are exact polynomials
Poly det_poly(std::vector<std::vector<Poly>> m);

// subresultant with formal degrees n >= deg_v(f), m >= deg_v(g).
// Formal degrees allow vanishing leading coefficients: the matrix is laid
// out as if deg f = n and deg g = m.
Poly subresultant_k_formal(const Poly& f, int n, const Poly& g, int m, Var v, int k);

// subresultant with actual degrees
Poly subresultant_k(const Poly& f, const Poly& g, Var v, int k);

// resultant (k = 0); DegenerateResultant if neither argument depends on v
Poly resultant(const Poly& f, const Poly& g, Var v);
Poly resultant_formal(const Poly& f, int n, const Poly& g, int m, Var v);

} // namespace cubiclines
