// Unit tests for fraction-free determinants and subresultants.  The three
// parametric fixture families are frozen closed forms; each is checked at
// many random rational parameter points.

#include "cubiclines/gcd.hpp"
#include "cubiclines/resultant.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cubiclines;
using namespace testutil;

TEST_CASE("determinants of small exact matrices") {
    CHECK(det_poly({}) == pc(1)); // empty product convention
    CHECK(det_poly({{pc(7)}}) == pc(7));
    CHECK(det_poly({{pc(1), pc(2)}, {pc(3), pc(4)}}) == pc(-2));
    // polynomial entries
    Poly x = px(), y = py();
    CHECK(det_poly({{x, y}, {y, x}}) == x * x - y * y);
    // singular matrix
    CHECK(det_poly({{x, y}, {x, y}}).is_zero());
    // 3x3 with a zero pivot forcing a row swap
    CHECK(det_poly({{pc(0), pc(1), pc(2)},
                    {pc(1), pc(0), pc(3)},
                    {pc(4), pc(5), pc(6)}}) == pc(16));
}

TEST_CASE("determinant is multilinear and alternating") {
    Rng rng(201);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<Poly>> m(3, std::vector<Poly>(3));
        for (auto& row : m)
            for (auto& e : row) e = rng.poly_xy(1);
        Poly d = det_poly(m);
        // swapping two rows negates
        std::vector<std::vector<Poly>> s = m;
        std::swap(s[0], s[2]);
        CHECK(det_poly(s) == -d);
        // scaling one row scales the determinant
        std::vector<std::vector<Poly>> sc = m;
        for (auto& e : sc[1]) e = e * pc(3);
        CHECK(det_poly(sc) == pc(3) * d);
        // transpose invariance
        std::vector<std::vector<Poly>> tr(3, std::vector<Poly>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) tr[i][j] = m[j][i];
        CHECK(det_poly(tr) == d);
    }
}

// helper: univariate polynomial in W from rational coefficients, descending
static Poly wpoly(const std::vector<Q>& desc) {
    Poly r;
    int n = static_cast<int>(desc.size()) - 1;
    for (int i = 0; i <= n; ++i) r += pW().pow(n - i) * Poly::constant(desc[i]);
    return r;
}

TEST_CASE("frozen elimination fixture: quadratic against depressed cubic") {
    Rng rng(202);
    for (int trial = 0; trial < 20; ++trial) {
        Q e = rng.rational(), n = rng.rational(), f = rng.rational(), b = rng.rational();
        Poly fq = wpoly({Q(3), Q(0), e});          // 3W^2 + e
        Poly gc = wpoly({Q(1), n, -f, b});         // W^3 + nW^2 - fW + b
        Poly r0 = subresultant_k(fq, gc, VarW, 0);
        Poly r1 = subresultant_k(fq, gc, VarW, 1);
        Q t1 = Q(3) * b - e * n;
        Q t2 = e + Q(3) * f;
        CHECK(r0 == Poly::constant(Q(-3) * t1 * t1 - e * t2 * t2));
        CHECK(r1 == Poly::constant(Q(3) * t2));
    }
}

TEST_CASE("frozen elimination fixture: quadratic against trinomial cubic") {
    Rng rng(203);
    for (int trial = 0; trial < 20; ++trial) {
        Q a = rng.rational(), c = rng.rational(), f = rng.rational();
        Poly fq = wpoly({Q(3), Q(0), Q(2) * c + f});   // 3W^2 + (2c+f)
        Poly gc = wpoly({Q(1), Q(0), -f, Q(2) * a});   // W^3 - fW + 2a
        Poly r0 = subresultant_k(fq, gc, VarW, 0);
        Poly r1 = subresultant_k(fq, gc, VarW, 1);
        Q u = Q(2) * c + f;
        Q v = c + Q(2) * f;
        CHECK(r0 == Poly::constant(Q(-4) * (Q(27) * a * a + u * v * v)));
        CHECK(r1 == Poly::constant(Q(6) * v));
    }
}

TEST_CASE("frozen elimination fixture: symbolic pair in X and Z") {
    Rng rng(204);
    for (int trial = 0; trial < 20; ++trial) {
        Q a = rng.rational(), e = rng.rational();
        Poly f = pc(3) * pX().pow(2) - Poly::constant(e) * pZ().pow(2); // 3X^2 - eZ^2
        Poly g = (pZ() * Poly::constant(a) + pX()).pow(2);              // (aZ + X)^2
        Poly r1 = subresultant_k(f, g, VarBX, 1);
        Poly r0 = subresultant_k(f, g, VarBX, 0);
        CHECK(r1 == Poly::constant(Q(6) * a) * pZ());
        Q w = e - Q(3) * a * a;
        CHECK(r0 == Poly::constant(-w * w) * pZ().pow(4));
    }
}

TEST_CASE("resultant agrees with root evaluation for split polynomials") {
    Rng rng(205);
    for (int trial = 0; trial < 15; ++trial) {
        // f = c * (W - r1)(W - r2)(W - r3), deg f > deg g
        Q c = rng.nonzero_rational();
        Q r1 = rng.rational(), r2 = rng.rational(), r3 = rng.rational();
        Poly f = Poly::constant(c) * (pW() - Poly::constant(r1)) *
                 (pW() - Poly::constant(r2)) * (pW() - Poly::constant(r3));
        Poly g = wpoly({rng.nonzero_rational(), rng.rational(), rng.rational()}); // deg 2
        auto ev = [&](const Q& r) {
            auto d = g.to_dense(VarW);
            Q acc(0), p(1);
            for (const auto& co : d) {
                acc += co * p;
                p *= r;
            }
            return acc;
        };
        // the mirrored bottom block reverses deg(f) = 3 rows relative to the
        // classical Sylvester layout, contributing a sign (-1)^{3*2/2} = -1:
        //   R^(0)(f, g) = - lc(f)^deg(g) * prod g(roots)
        Q expected = -(c * c * ev(r1) * ev(r2) * ev(r3));
        CHECK(resultant(f, g, VarW) == Poly::constant(expected));
    }
}

TEST_CASE("resultant is multiplicative in the second argument") {
    Rng rng(206);
    for (int trial = 0; trial < 10; ++trial) {
        Poly f = rng.poly_univ(VarW, 5);
        Poly g = rng.poly_univ(VarW, 2);
        Poly h = rng.poly_univ(VarW, 2);
        CHECK(resultant(f, g * h, VarW) == resultant(f, g, VarW) * resultant(f, h, VarW));
    }
}

TEST_CASE("resultant vanishes exactly on a shared root") {
    Poly shared = pW() - pc(3, 2);
    Poly f = shared * wpoly({Q(1), Q(1), Q(1)});
    Poly g = shared * wpoly({Q(2), Q(-1)});
    CHECK(resultant(f, g, VarW).is_zero());
    // perturb g away from the shared root
    Poly g2 = g + pc(1);
    CHECK_FALSE(resultant(f, g2, VarW).is_zero());
}

TEST_CASE("subresultant ladder locates the gcd degree") {
    Rng rng(207);
    int done = 0;
    while (done < 15) {
        int dh = rng.integer(0, 2);
        Poly h = rng.poly_univ(VarW, dh);
        Poly u = rng.poly_univ(VarW, 3);
        Poly v = rng.poly_univ(VarW, 2);
        if (!gcd_poly(u, v).is_constant()) continue; // need coprime cofactors
        Poly f = h * u, g = h * v;
        ++done;
        // R^(0) .. R^(dh-1) vanish, R^(dh) does not
        for (int k = 0; k < dh; ++k) CHECK(subresultant_k(f, g, VarW, k).is_zero());
        CHECK_FALSE(subresultant_k(f, g, VarW, dh).is_zero());
    }
}

TEST_CASE("formal degrees change the matrix layout") {
    // f = W + 1 viewed with formal degree 2 (vanishing leading coefficient)
    Poly f = pW() + pc(1);
    Poly g = pW().pow(2) - pc(2);
    Poly actual = subresultant_k(f, g, VarW, 0);
    Poly formal = subresultant_k_formal(f, 2, g, 2, VarW, 0);
    // actual: g on top (higher degree), bottom block mirrors two rows of f;
    // hand expansion of [[1,0,-2],[0,1,1],[1,1,0]] gives +1
    CHECK(actual == pc(1));
    // formal: 4x4 layout with a vanishing top coefficient; expanding the
    // determinant by hand gives +1
    CHECK(formal == pc(1));
    CHECK_THROWS_AS(subresultant_k_formal(g, 1, f, 1, VarW, 0), InvalidIndex);
    CHECK_THROWS_AS(subresultant_k(f, g, VarW, 2), InvalidIndex);
    CHECK_THROWS_AS(subresultant_k(f, g, VarW, -1), InvalidIndex);
}

TEST_CASE("degenerate resultant inputs are rejected") {
    CHECK_THROWS_AS(resultant(pc(3), pc(5), VarW), DegenerateResultant);
    CHECK(resultant(Poly::zero(), pW() + pc(1), VarW).is_zero());
    // constant against a genuine polynomial: power rule
    CHECK(resultant(pc(3), pW().pow(2) + pc(1), VarW) == pc(9));
}
