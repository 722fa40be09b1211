#include "cubiclines/quadext.hpp"

namespace cubiclines {

namespace {

// factor |n| = s * m^2 with s squarefree; returns {s, m}.  Trial division to
// 10^6, then perfect-square extraction of the cofactor.
std::pair<Z, Z> squarefree_decompose(Z n) {
    Z s = 1, m = 1;
    if (sgn(n) < 0) n = -n;
    for (long p = 2; p <= 1000000 && cmp(n, 1) > 0; p == 2 ? p = 3 : p += 2) {
        Z pz(p);
        if (cmp(pz * pz, n) > 0) break;
        int e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), pz.get_mpz_t())) {
            n /= pz;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) m *= pz;
        if (e % 2 == 1) s *= pz;
    }
    if (cmp(n, 1) > 0) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Z r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            m *= r;
        } else {
            s *= n;
        }
    }
    return {s, m};
}

} // namespace

QuadExt::QuadExt(const Q& a_, const Q& b_, long long d_) : a(a_), b(b_), d(d_) {
    if (sgn(b) == 0) d = 0;
    if (d == 0) b = 0;
    if (d == 1) {
        a += b;
        b = 0;
        d = 0;
    }
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    if (d != 0 && o.d != 0 && d != o.d)
        throw UnsupportedExtension("mixing distinct radicands");
    long long rd = d != 0 ? d : o.d;
    return QuadExt(a + o.a, b + o.b, rd);
}

QuadExt QuadExt::operator-(const QuadExt& o) const { return *this + (-o); }

QuadExt QuadExt::operator*(const QuadExt& o) const {
    if (d != 0 && o.d != 0 && d != o.d)
        throw UnsupportedExtension("mixing distinct radicands");
    long long rd = d != 0 ? d : o.d;
    // (a + b r)(a' + b' r) = aa' + bb' d + (ab' + a'b) r
    return QuadExt(a * o.a + b * o.b * Q(static_cast<long>(rd)), a * o.b + b * o.a, rd);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    if (o.is_zero()) throw DivisibilityError("division by zero scalar");
    Q n = o.norm();
    QuadExt inv(o.a / n, -o.b / n, o.d);
    return *this * inv;
}

bool QuadExt::operator==(const QuadExt& o) const {
    return d == o.d && cmp(a, o.a) == 0 && cmp(b, o.b) == 0;
}

int QuadExt::sign_real() const {
    if (d < 0) throw UnsupportedExtension("sign of an imaginary value");
    if (sgn(b) == 0) return sgn(a);
    if (sgn(a) == 0) return sgn(b);
    // compare a with -b sqrt(d): same signs add up, else compare squares
    if (sgn(a) == sgn(b)) return sgn(a);
    Q a2 = a * a, b2 = b * b * Q(static_cast<long>(d));
    int c = cmp(a2, b2);
    if (c == 0) return 0;
    return (c > 0) ? sgn(a) : sgn(b);
}

std::string QuadExt::str() const {
    if (d == 0) return q_str(a);
    std::string rad = (d == -1) ? "i" : ("sqrt(" + std::to_string(d) + ")");
    std::string bs;
    if (cmp(b, Q(1)) == 0)
        bs = rad;
    else if (cmp(b, Q(-1)) == 0)
        bs = "-" + rad;
    else
        bs = q_str(b) + "*" + rad;
    if (sgn(a) == 0) return bs;
    if (sgn(b) < 0) {
        QuadExt m(Q(0), -b, d);
        return q_str(a) + " - " + m.str();
    }
    return q_str(a) + " + " + bs;
}

QuadExt sqrt_rational(const Q& r) {
    if (sgn(r) == 0) return QuadExt();
    Z num = r.get_num(), den = r.get_den();
    Z t = num * den;
    auto [s, m] = squarefree_decompose(t);
    if (sgn(t) < 0) s = -s;
    Q coef(m, den);
    coef.canonicalize();
    if (cmp(s, 1) == 0) return QuadExt(coef);
    return QuadExt(Q(0), coef, s.get_si());
}

PolyE to_ext(const Poly& f) {
    PolyE r;
    for (const auto& t : f.terms()) r += PolyE::term(t.first, QuadExt(t.second));
    return r;
}

Poly to_rational(const PolyE& f) {
    Poly r;
    for (const auto& t : f.terms()) {
        if (t.second.d != 0)
            throw UnsupportedExtension("polynomial has irrational coefficients");
        r += Poly::term(t.first, t.second.a);
    }
    return r;
}

} // namespace cubiclines
