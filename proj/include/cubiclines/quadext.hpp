#pragma once
// ============================================================================
// Quadratic extension scalars a + b*sqrt(d) with a, b rational and d a
// squarefree integer (d = 0 encodes a plain rational; d < 0 is imaginary).
// Mixing two different nonzero radicands raises UnsupportedExtension.
// ============================================================================

#include <string>

#include "cubiclines/poly.hpp"
#include "cubiclines/rational.hpp"

namespace cubiclines {

struct QuadExt {
    Q a{0};
    Q b{0};
    long long d{0};

    QuadExt() = default;
    QuadExt(const Q& rational) : a(rational) {}
    QuadExt(long n) : a(Q(n)) {}
    QuadExt(const Q& a_, const Q& b_, long long d_);

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return d == 0; }
    bool is_real() const { return d >= 0; }

    QuadExt conj() const { return QuadExt(a, -b, d); }
    Q norm() const { return a * a - b * b * Q(static_cast<long>(d)); } // value * conjugate

    QuadExt operator-() const { return QuadExt(-a, -b, d); }
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    // sign of a real value; throws on imaginary radicand
    int sign_real() const;

    std::string str() const;
};

// exact square root of a rational: sqrt(r) = coef * sqrt(radicand)
QuadExt sqrt_rational(const Q& r);

template <>
struct CoeffTraits<QuadExt> {
    static QuadExt zero() { return QuadExt(); }
    static QuadExt one() { return QuadExt(Q(1)); }
    static QuadExt from_int(long n) { return QuadExt(Q(n)); }
    static bool is_zero(const QuadExt& c) { return c.is_zero(); }
    static QuadExt neg(const QuadExt& c) { return -c; }
    static QuadExt add(const QuadExt& x, const QuadExt& y) { return x + y; }
    static QuadExt sub(const QuadExt& x, const QuadExt& y) { return x - y; }
    static QuadExt mul(const QuadExt& x, const QuadExt& y) { return x * y; }
    static QuadExt div(const QuadExt& x, const QuadExt& y) { return x / y; }
    static bool eq(const QuadExt& x, const QuadExt& y) { return x == y; }
    static std::string str(const QuadExt& c) { return c.str(); }
    static bool is_negative_for_print(const QuadExt& c) {
        return sgn(c.a) < 0 || (sgn(c.a) == 0 && sgn(c.b) < 0);
    }
    static QuadExt abs_for_print(const QuadExt& c) {
        return is_negative_for_print(c) ? -c : c;
    }
};

using PolyE = MPolyT<QuadExt>;

// embed a rational polynomial into the extension
PolyE to_ext(const Poly& f);
// extract a rational polynomial; throws UnsupportedExtension when any
// coefficient has an irrational part
Poly to_rational(const PolyE& f);

} // namespace cubiclines
