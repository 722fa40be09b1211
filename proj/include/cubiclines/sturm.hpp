#pragma once
// ============================================================================
// Real-root counting and isolation for univariate rational polynomials.
// Dense representation: coefficient vector indexed by exponent (ascending);
// the zero polynomial is {} or all zeros.
// ============================================================================

#include <optional>
#include <vector>

#include "cubiclines/poly.hpp"

namespace cubiclines {

using DensePoly = std::vector<Q>;

int dense_degree(const DensePoly& f);
DensePoly dense_trim(DensePoly f);
DensePoly dense_derivative(const DensePoly& f);
Q dense_eval(const DensePoly& f, const Q& x);
DensePoly dense_mul(const DensePoly& a, const DensePoly& b);
// quotient/remainder over Q; divisor must be nonzero
std::pair<DensePoly, DensePoly> dense_divmod(const DensePoly& f, const DensePoly& g);
DensePoly dense_gcd(const DensePoly& f, const DensePoly& g); // monic
DensePoly dense_squarefree_part(const DensePoly& f);         // monic

// number of distinct real roots (of the squarefree part), optionally within
// the open interval (lo, hi); unbounded side when the optional is empty
int real_root_count(const DensePoly& f, std::optional<Q> lo = std::nullopt,
                    std::optional<Q> hi = std::nullopt);

int real_root_count(const Poly& f, Var v);

// Isolation of all real roots of a nonzero polynomial.  Exact rational roots
// are reported with lo == hi; otherwise lo < root < hi, the interval contains
// exactly one root and f(lo), f(hi) are nonzero.  Sorted ascending, disjoint.
struct RootInterval {
    Q lo, hi;
    bool exact() const { return cmp(lo, hi) == 0; }
};
std::vector<RootInterval> isolate_real_roots(const DensePoly& f);

// halve the width of an isolating interval (no-op for exact roots)
RootInterval refine_interval(const DensePoly& squarefree, const RootInterval& iv);

} // namespace cubiclines
