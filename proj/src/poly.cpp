#include "cubiclines/poly.hpp"

namespace cubiclines {

Poly homogenize(const Poly& f, int degree) {
    if (f.is_zero()) return Poly::zero();
    if (degree < f.degree()) throw InvalidDegree("homogenization degree below total degree");
    Poly r;
    for (const auto& t : f.terms()) {
        const Mono& m = t.first;
        for (int v = 0; v < kNumVars; ++v)
            if (v != VarX && v != VarY && m.e[v] != 0)
                throw InvalidDegree("homogenization expects a polynomial in (x, y)");
        Mono h;
        h.e[VarBX] = m.e[VarX];
        h.e[VarBY] = m.e[VarY];
        h.e[VarBZ] = static_cast<std::uint8_t>(degree - m.e[VarX] - m.e[VarY]);
        r += Poly::term(h, t.second);
    }
    return r;
}

Poly dehomogenize_xy(const Poly& F) {
    Poly r;
    for (const auto& t : F.terms()) {
        const Mono& m = t.first;
        for (int v = 0; v < kNumVars; ++v)
            if (v != VarBX && v != VarBY && v != VarBZ && m.e[v] != 0)
                throw InvalidDegree("dehomogenization expects a polynomial in (X, Y, Z)");
        Mono a;
        a.e[VarX] = m.e[VarBX];
        a.e[VarY] = m.e[VarBY];
        r += Poly::term(a, t.second);
    }
    return r;
}

Poly substitute_affine(const Poly& f, const std::array<Q, 4>& m, const std::array<Q, 2>& t) {
    Q det = m[0] * m[3] - m[1] * m[2];
    if (sgn(det) == 0) throw SingularTransform("affine substitution with singular matrix");
    Poly ix = Poly::variable(VarX) * m[0] + Poly::variable(VarY) * m[1] + Poly::constant(t[0]);
    Poly iy = Poly::variable(VarX) * m[2] + Poly::variable(VarY) * m[3] + Poly::constant(t[1]);
    return f.substitute({{VarX, ix}, {VarY, iy}});
}

Q content(const Poly& f) {
    if (f.is_zero()) return Q(0);
    Z num_gcd = 0, den_lcm = 1;
    for (const auto& t : f.terms()) {
        Z n = t.second.get_num();
        Z d = t.second.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Q c(num_gcd, den_lcm);
    c.canonicalize();
    if (sgn(f.lc()) < 0) c = -c;
    return c;
}

Poly primitive_part(const Poly& f) {
    if (f.is_zero()) return f;
    Q c = content(f);
    Q inv = 1 / c;
    return f * inv;
}

Poly normalized(const Poly& f) { return primitive_part(f); }

Q eval_xy(const Poly& f, const Q& px, const Q& py) {
    Q acc(0);
    for (const auto& t : f.terms()) {
        const Mono& m = t.first;
        for (int v = 0; v < kNumVars; ++v)
            if (v != VarX && v != VarY && m.e[v] != 0)
                throw UnsupportedShape("evaluation expects a polynomial in (x, y)");
        Q term = t.second;
        for (int i = 0; i < m.e[VarX]; ++i) term *= px;
        for (int i = 0; i < m.e[VarY]; ++i) term *= py;
        acc += term;
    }
    return acc;
}

} // namespace cubiclines
