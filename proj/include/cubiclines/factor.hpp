#pragma once
// ============================================================================
// Exact factorization over Q into irreducibles.
//
// Supported shapes: univariate in any alphabet variable; bivariate;
// homogeneous binary and ternary forms (reduced by dehomogenization).
// Anything with three or more essential variables that is not a homogeneous
// form, or of total degree above the cap, raises UnsupportedShape.
// Factors are primitive with positive leading coefficient in graded-lex
// order, sorted canonically; constant * product(factor^exponent) == input.
// ============================================================================

#include <vector>

#include "cubiclines/poly.hpp"

namespace cubiclines {

struct UFactor {
    Poly factor;
    int exponent;
};

struct Factorization {
    Q constant{1};
    std::vector<UFactor> factors;

    Poly expand() const {
        Poly r = Poly::constant(constant);
        for (const auto& uf : factors) r *= uf.factor.pow(uf.exponent);
        return r;
    }
};

constexpr int kFactorDegreeCap = 12;

Factorization factor(const Poly& f);

// convenience: exponent of an irreducible (or any nonconstant) divisor
int divisor_exponent(const Poly& f, const Poly& divisor);

} // namespace cubiclines
