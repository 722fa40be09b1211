#include "cubiclines/resultant.hpp"

namespace cubiclines {

Poly det_poly(std::vector<std::vector<Poly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Poly::constant(Q(1));
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw InvalidIndex("determinant of non-square matrix");
    int sign = 1;
    Poly prev = Poly::constant(Q(1));
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Poly::zero();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = Poly::exact_div(num, prev);
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

namespace {

// coefficient list a_0..a_n with a_0 the (formal) leading coefficient
std::vector<Poly> coeff_rows(const Poly& f, int formal_degree, Var v) {
    std::vector<Poly> c(static_cast<std::size_t>(formal_degree) + 1);
    for (int i = 0; i <= formal_degree; ++i) c[i] = f.coeff_of(v, formal_degree - i);
    return c;
}

} // namespace

Poly subresultant_k_formal(const Poly& f, int n, const Poly& g, int m, Var v, int k) {
    if (n < 0 || m < 0) throw InvalidIndex("negative formal degree");
    if (f.degree(v) > n || g.degree(v) > m)
        throw InvalidIndex("formal degree below actual degree");
    if (k < 0 || k > std::min(n, m)) throw InvalidIndex("subresultant index out of range");
    // higher-degree block on top
    const Poly* top = &f;
    const Poly* bot = &g;
    int tn = n, bm = m;
    if (m > n) {
        top = &g;
        bot = &f;
        tn = m;
        bm = n;
    }
    const int size = tn + bm - 2 * k;
    if (size == 0) return Poly::constant(Q(1));
    std::vector<Poly> a = coeff_rows(*top, tn, v);
    std::vector<Poly> b = coeff_rows(*bot, bm, v);
    std::vector<std::vector<Poly>> mat(size, std::vector<Poly>(size, Poly::zero()));
    // bm - k rows of a's from the top: row i has a_{j-i}
    for (int i = 0; i < bm - k; ++i)
        for (int j = 0; j < size; ++j) {
            int idx = j - i;
            if (idx >= 0 && idx <= tn) mat[i][j] = a[idx];
        }
    // tn - k rows of b's from the bottom: bottom row has b_j, next b_{j-1}, ...
    for (int r = 0; r < tn - k; ++r) {
        int i = size - 1 - r;
        for (int j = 0; j < size; ++j) {
            int idx = j - r;
            if (idx >= 0 && idx <= bm) mat[i][j] = b[idx];
        }
    }
    return det_poly(std::move(mat));
}

Poly subresultant_k(const Poly& f, const Poly& g, Var v, int k) {
    int n = f.degree(v), m = g.degree(v);
    if (n < 0 || m < 0) throw InvalidIndex("subresultant of the zero polynomial");
    return subresultant_k_formal(f, n, g, m, v, k);
}

Poly resultant(const Poly& f, const Poly& g, Var v) {
    if (f.is_zero() || g.is_zero()) return Poly::zero();
    int n = f.degree(v), m = g.degree(v);
    if (n == 0 && m == 0)
        throw DegenerateResultant("resultant of two polynomials constant in the variable");
    if (n == 0) return f.pow(m);
    if (m == 0) return g.pow(n);
    return subresultant_k_formal(f, n, g, m, v, 0);
}

Poly resultant_formal(const Poly& f, int n, const Poly& g, int m, Var v) {
    if (n == 0 && m == 0)
        throw DegenerateResultant("resultant of two polynomials constant in the variable");
    return subresultant_k_formal(f, n, g, m, v, 0);
}

} // namespace cubiclines
