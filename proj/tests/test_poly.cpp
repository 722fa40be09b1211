// Unit tests for the sparse multivariate polynomial core: ring operations,
// substitution, calculus, normalization, and transvectants.

#include <map>

#include "doctest.h"
#include "helpers.hpp"

using namespace cubiclines;
using namespace testutil;

TEST_CASE("monomial keys order by graded lex") {
    Mono a = Mono::of(VarX, 2);            // x^2
    Mono b = Mono::of(VarX, 1) * Mono::of(VarY, 1); // xy
    Mono c = Mono::of(VarY, 2);            // y^2
    Mono d = Mono::of(VarX, 1);            // x
    CHECK(a.key() > b.key());
    CHECK(b.key() > c.key());
    CHECK(c.key() > d.key());
    CHECK(Mono::from_key(a.key()) == a);
    CHECK(Mono::one().key() == 0);
}

TEST_CASE("ring arithmetic basics") {
    Poly x = px(), y = py();
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + pc(2) * x * y + y * y);
    Poly z = Poly::zero();
    CHECK((x * z).is_zero());
    CHECK(x + (-x) == z);
    CHECK(x - x == z);
    CHECK(pc(3, 4) * pc(4, 3) == pc(1));
    CHECK((x + pc(1)).degree() == 1);
    CHECK(z.degree() == -1);
    CHECK((x * x * y).degree(VarX) == 2);
    CHECK((x * x * y).degree(VarY) == 1);
    CHECK((x * x * y).degree(VarW) == 0);
}

TEST_CASE("addition merges and cancels exactly") {
    Rng rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        Poly f = rng.poly_xy(4);
        Poly g = rng.poly_xy(4);
        Poly h = rng.poly_xy(3);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f + g - g == f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("coeff lookup is exact") {
    Poly f = pc(3) * px() * px() + pc(-7, 2) * px() * py() + pc(5);
    CHECK(cmp(f.coeff(Mono::of(VarX, 2)), Q(3)) == 0);
    CHECK(cmp(f.coeff(Mono::of(VarX, 1) * Mono::of(VarY, 1)), make_q(-7, 2)) == 0);
    CHECK(cmp(f.coeff(Mono::one()), Q(5)) == 0);
    CHECK(sgn(f.coeff(Mono::of(VarY, 2))) == 0);
}

TEST_CASE("exact division round trips and rejects non-multiples") {
    Rng rng(102);
    for (int trial = 0; trial < 25; ++trial) {
        Poly f = rng.poly_xy(3);
        Poly g = rng.poly_xy(2);
        if (g.is_zero()) continue;
        CHECK(Poly::exact_div(f * g, g) == f);
        Poly quot;
        CHECK(Poly::try_exact_div(f * g, g, quot));
        CHECK(quot == f);
    }
    Poly x = px(), y = py();
    CHECK_THROWS_AS(Poly::exact_div(x * x + y, x + pc(1)), DivisibilityError);
    CHECK_THROWS_AS(Poly::exact_div(x, Poly::zero()), DivisibilityError);
    Poly q;
    CHECK_FALSE(Poly::try_exact_div(x * x + y, x + pc(1), q));
}

TEST_CASE("derivative satisfies the Leibniz rule") {
    Rng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        Poly f = rng.poly_xy(4);
        Poly g = rng.poly_xy(4);
        CHECK((f * g).derivative(VarX) ==
              f.derivative(VarX) * g + f * g.derivative(VarX));
        CHECK((f * g).derivative(VarY) ==
              f.derivative(VarY) * g + f * g.derivative(VarY));
        // mixed partials commute
        CHECK(f.derivative(VarX).derivative(VarY) == f.derivative(VarY).derivative(VarX));
    }
    CHECK(px().pow(5).derivative(VarX) == pc(5) * px().pow(4));
    CHECK(pc(7).derivative(VarX).is_zero());
}

TEST_CASE("substitution is a ring homomorphism") {
    Rng rng(104);
    for (int trial = 0; trial < 15; ++trial) {
        Poly f = rng.poly_xy(3);
        Poly g = rng.poly_xy(3);
        Poly ix = rng.poly_xy(2);
        Poly iy = rng.poly_xy(2);
        std::map<Var, Poly> images{{VarX, ix}, {VarY, iy}};
        CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
        CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
    }
    // simultaneous, not sequential: x -> y, y -> x swaps
    Poly f = px().pow(2) + pc(3) * py();
    Poly swapped = f.substitute(std::map<Var, Poly>{{VarX, py()}, {VarY, px()}});
    CHECK(swapped == py().pow(2) + pc(3) * px());
}

TEST_CASE("coeff_of slices by one variable") {
    Poly f = pW().pow(2) * (px() + pc(1)) + pW() * py() + pc(5) * px();
    CHECK(f.coeff_of(VarW, 2) == px() + pc(1));
    CHECK(f.coeff_of(VarW, 1) == py());
    CHECK(f.coeff_of(VarW, 0) == pc(5) * px());
    CHECK(f.coeff_of(VarW, 3).is_zero());
    // reassembly
    Poly back;
    for (int e = 0; e <= f.degree(VarW); ++e)
        back += f.coeff_of(VarW, e) * pW().pow(e);
    CHECK(back == f);
}

TEST_CASE("dense views round trip") {
    Poly f = pc(3) * pW().pow(4) + pc(-1, 2) * pW() + pc(7);
    auto d = f.to_dense(VarW);
    REQUIRE(d.size() == 5);
    CHECK(cmp(d[4], Q(3)) == 0);
    CHECK(cmp(d[1], make_q(-1, 2)) == 0);
    CHECK(cmp(d[0], Q(7)) == 0);
    CHECK(sgn(d[2]) == 0);
    CHECK(Poly::from_dense(d, VarW) == f);
    CHECK_THROWS_AS((px() * pW()).to_dense(VarW), UnsupportedShape);
}

TEST_CASE("content and primitive normalization") {
    Poly f = pc(4, 6) * px() + pc(8, 6) * py(); // = (2/3)(x + 2y)
    CHECK(cmp(content(f), make_q(2, 3)) == 0);
    CHECK(primitive_part(f) == px() + pc(2) * py());
    Poly g = pc(-2) * px() - pc(4) * py();
    CHECK(cmp(content(g), Q(-2)) == 0);
    CHECK(primitive_part(g) == px() + pc(2) * py());
    CHECK(normalized(g) == px() + pc(2) * py());
    Rng rng(105);
    for (int trial = 0; trial < 20; ++trial) {
        Poly h = rng.poly_xy(3);
        if (h.is_zero()) continue;
        CHECK(Poly::constant(content(h)) * primitive_part(h) == h);
        CHECK(sgn(primitive_part(h).lc()) > 0);
    }
}

TEST_CASE("homogenization round trips through the affine chart") {
    Poly f = px().pow(3) + pc(2) * px() * py() + pc(-5);
    Poly F = homogenize(f, 3);
    CHECK(F.degree() == 3);
    // every term reaches total degree 3
    for (const auto& t : F.terms()) CHECK(t.first.total() == 3);
    CHECK(dehomogenize_xy(F) == f);
    CHECK(F.substitute(std::map<Var, Poly>{{VarBX, px()}, {VarBY, py()}, {VarBZ, pc(1)}}) == f);
    // padding to a higher degree multiplies by Z
    Poly F4 = homogenize(f, 4);
    CHECK(F4 == F * pZ());
    CHECK_THROWS_AS(homogenize(f, 2), InvalidDegree);
    CHECK_THROWS_AS(homogenize(pW() + pc(1), 1), InvalidDegree);
}

TEST_CASE("affine substitution composes and rejects singular maps") {
    Poly f = px().pow(2) + py();
    // x -> x + 1, y -> y - 2
    Poly g = substitute_affine(f, {Q(1), Q(0), Q(0), Q(1)}, {Q(1), Q(-2)});
    CHECK(g == (px() + pc(1)).pow(2) + py() - pc(2));
    CHECK_THROWS_AS(substitute_affine(f, {Q(1), Q(2), Q(2), Q(4)}, {Q(0), Q(0)}),
                    SingularTransform);
    Rng rng(106);
    for (int trial = 0; trial < 10; ++trial) {
        Poly h = rng.poly_xy(3);
        std::array<Q, 4> m{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
        if (sgn(m[0] * m[3] - m[1] * m[2]) == 0) continue;
        std::array<Q, 2> t{rng.rational(), rng.rational()};
        // evaluate both sides at a random point
        Q ax = rng.rational(), ay = rng.rational();
        Q lhs = eval_xy(substitute_affine(h, m, t), ax, ay);
        Q rhs = eval_xy(h, m[0] * ax + m[1] * ay + t[0], m[2] * ax + m[3] * ay + t[1]);
        CHECK(cmp(lhs, rhs) == 0);
    }
}

TEST_CASE("evaluation matches Horner-free expansion") {
    Poly f = pc(2) * px().pow(2) * py() - pc(3, 4) * py().pow(3) + pc(1);
    Q v = eval_xy(f, Q(2), Q(-1));
    // 2*4*(-1) - (3/4)*(-1) + 1 = -8 + 3/4 + 1 = -25/4
    CHECK(cmp(v, make_q(-25, 4)) == 0);
}

// ---------------------------------------------------------------------------
// Transvectants.  The expected value of the second fixture is recomputed from
// an independently coded formula for the second transvectant of a form with
// itself: 2 (f_xx f_yy - f_xy^2).
// ---------------------------------------------------------------------------

TEST_CASE("first transvectant of x^2 and y^2") {
    Poly f = px().pow(2), g = py().pow(2);
    CHECK(transvectant(f, g, 1) == pc(4) * px() * py());
}

TEST_CASE("second transvectant of a quartic with itself") {
    Poly f = px().pow(3) * py() - px() * py().pow(3);
    // independent oracle: (f, f)^(2) = 2 (f_xx f_yy - f_xy^2)
    Poly fxx = f.derivative(VarX).derivative(VarX);
    Poly fyy = f.derivative(VarY).derivative(VarY);
    Poly fxy = f.derivative(VarX).derivative(VarY);
    Poly oracle = pc(2) * (fxx * fyy - fxy * fxy);
    Poly got = transvectant(f, f, 2);
    CHECK(got == oracle);
    // frozen expansion
    CHECK(got == pc(-18) * (px().pow(2) + py().pow(2)).pow(2));
}

TEST_CASE("transvectant symmetry and degree law") {
    Rng rng(107);
    for (int trial = 0; trial < 12; ++trial) {
        int df = rng.integer(1, 4), dg = rng.integer(1, 4);
        Poly f = rng.form_xy(df), g = rng.form_xy(dg);
        for (int k = 0; k <= std::min(df, dg); ++k) {
            Poly fg = transvectant(f, g, k);
            Poly gf = transvectant(g, f, k);
            if (k % 2 == 0)
                CHECK(fg == gf);
            else
                CHECK(fg == -gf);
            if (!fg.is_zero()) CHECK(fg.degree() == df + dg - 2 * k);
        }
        // order zero is the plain product
        CHECK(transvectant(f, g, 0) == f * g);
    }
}

TEST_CASE("transvectant is bilinear") {
    Rng rng(108);
    for (int trial = 0; trial < 10; ++trial) {
        Poly f = rng.form_xy(3), g = rng.form_xy(3), h = rng.form_xy(3);
        Q c = rng.rational();
        for (int k = 1; k <= 3; ++k) {
            CHECK(transvectant(f + g, h, k) ==
                  transvectant(f, h, k) + transvectant(g, h, k));
            CHECK(transvectant(f * c, h, k) == transvectant(f, h, k) * c);
        }
    }
}

TEST_CASE("canonical printing") {
    CHECK(Poly::zero().str() == "0");
    CHECK(pc(1).str() == "1");
    CHECK(pc(-3, 2).str() == "-3/2");
    CHECK((px() - py()).str() == "x - y");
    CHECK((pc(2) * px().pow(2) + pc(-1) * py()).str() == "2*x^2 - y");
    CHECK((pc(1, 2) * px() * pW()).str() == "1/2*x*W");
}
