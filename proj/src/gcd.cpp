#include "cubiclines/gcd.hpp"

namespace cubiclines {

namespace {

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r
Poly prem(const Poly& a, const Poly& b, Var v) {
    const int d = b.degree(v);
    const Poly l = b.coeff_of(v, d);
    Poly r = a;
    int e = a.degree(v) - d + 1;
    while (!r.is_zero() && r.degree(v) >= d) {
        const int dr = r.degree(v);
        Poly t = r.coeff_of(v, dr) * Poly::variable(v, dr - d);
        r = r * l - t * b;
        --e;
    }
    while (e-- > 0) r = r * l;
    return r;
}

} // namespace

Poly content_wrt(const Poly& f, Var v) {
    if (f.is_zero()) return Poly::zero();
    Poly c = Poly::zero();
    for (int e = 0; e <= f.degree(v); ++e) {
        Poly ce = f.coeff_of(v, e);
        if (ce.is_zero()) continue;
        c = gcd_poly(c, ce);
        if (c.is_constant()) break;
    }
    return c;
}

Poly primitive_part_wrt(const Poly& f, Var v) {
    if (f.is_zero()) return f;
    Poly c = content_wrt(f, v);
    return Poly::exact_div(f, c);
}

Poly gcd_poly(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) return Poly::zero();
    if (f.is_zero()) return normalized(g);
    if (g.is_zero()) return normalized(f);
    if (f.is_constant() || g.is_constant()) return Poly::constant(Q(1));

    // main variable: present in both, smallest min-degree; if none is shared
    // the gcd is constant
    int best = -1, best_deg = 1 << 30;
    for (int v = 0; v < kNumVars; ++v) {
        int df = f.degree(static_cast<Var>(v)), dg = g.degree(static_cast<Var>(v));
        if (df > 0 && dg > 0 && std::min(df, dg) < best_deg) {
            best = v;
            best_deg = std::min(df, dg);
        }
    }
    if (best < 0) return Poly::constant(Q(1));
    const Var v = static_cast<Var>(best);

    Poly cf = content_wrt(f, v);
    Poly cg = content_wrt(g, v);
    Poly c = gcd_poly(cf, cg);
    Poly a = Poly::exact_div(f, cf);
    Poly b = Poly::exact_div(g, cg);
    if (a.degree(v) < b.degree(v)) std::swap(a, b);

    Poly gg = Poly::constant(Q(1));
    Poly hh = Poly::constant(Q(1));
    while (true) {
        const int delta = a.degree(v) - b.degree(v);
        Poly r = prem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            // coprime in v: only the content survives
            return normalized(c);
        }
        a = b;
        Poly divisor = gg * hh.pow(delta);
        b = Poly::exact_div(r, divisor);
        gg = a.coeff_of(v, a.degree(v));
        if (delta == 1)
            hh = gg;
        else if (delta > 1)
            hh = Poly::exact_div(gg.pow(delta), hh.pow(delta - 1));
    }
    Poly result = c * primitive_part_wrt(b, v);
    return normalized(result);
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero() || f.is_constant()) return normalized(f);
    // repeated-factor part: gcd of f with all its partials
    Poly rep = f;
    for (int v = 0; v < kNumVars; ++v) {
        if (!f.depends_on(static_cast<Var>(v))) continue;
        rep = gcd_poly(rep, f.derivative(static_cast<Var>(v)));
        if (rep.is_constant()) break;
    }
    if (rep.is_constant()) return normalized(f);
    return normalized(Poly::exact_div(normalized(f), rep));
}

} // namespace cubiclines
