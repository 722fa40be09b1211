#pragma once
// Shared helpers for the unit tests: deterministic randomness and shorthand
// polynomial builders.

#include <random>

#include "cubiclines/poly.hpp"

namespace testutil {

using cubiclines::Mono;
using cubiclines::Poly;
using cubiclines::Q;
using cubiclines::Var;

inline Poly px() { return Poly::variable(cubiclines::VarX); }
inline Poly py() { return Poly::variable(cubiclines::VarY); }
inline Poly pX() { return Poly::variable(cubiclines::VarBX); }
inline Poly pY() { return Poly::variable(cubiclines::VarBY); }
inline Poly pZ() { return Poly::variable(cubiclines::VarBZ); }
inline Poly pW() { return Poly::variable(cubiclines::VarW); }
inline Poly pc(long n, long d = 1) { return Poly::constant(cubiclines::make_q(n, d)); }

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long seed) : gen(seed) {}

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen);
    }
    Q rational(long max_num = 9, long max_den = 7) {
        long n = integer(-max_num, max_num);
        long den = integer(1, max_den);
        return cubiclines::make_q(n, den);
    }
    Q nonzero_rational(long max_num = 9, long max_den = 7) {
        Q q;
        do {
            q = rational(max_num, max_den);
        } while (sgn(q) == 0);
        return q;
    }
    // dense random polynomial in (x, y) of total degree <= d
    Poly poly_xy(int d, long max_num = 5) {
        Poly r;
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) {
                Q c = rational(max_num, 3);
                if (sgn(c) == 0) continue;
                Mono m;
                m.e[cubiclines::VarX] = static_cast<std::uint8_t>(i);
                m.e[cubiclines::VarY] = static_cast<std::uint8_t>(j);
                r += Poly::term(m, c);
            }
        return r;
    }
    // random binary form of exact degree d (nonzero)
    Poly form_xy(int d, long max_num = 5) {
        Poly r;
        do {
            r = Poly::zero();
            for (int i = 0; i <= d; ++i) {
                Q c = rational(max_num, 3);
                if (sgn(c) == 0) continue;
                Mono m;
                m.e[cubiclines::VarX] = static_cast<std::uint8_t>(i);
                m.e[cubiclines::VarY] = static_cast<std::uint8_t>(d - i);
                r += Poly::term(m, c);
            }
        } while (r.is_zero());
        return r;
    }
    // random univariate polynomial of exact degree d in variable v
    Poly poly_univ(Var v, int d, long max_num = 5) {
        Poly r = Poly::variable(v, d) * Poly::constant(nonzero_rational(max_num, 3));
        for (int i = 0; i < d; ++i) {
            Q c = rational(max_num, 3);
            if (sgn(c) != 0) r += Poly::variable(v, i) * Poly::constant(c);
        }
        return r;
    }
};

} // namespace testutil
