#include "cubiclines/factor.hpp"

#include <algorithm>
#include <random>

#include "cubiclines/gcd.hpp"
#include "cubiclines/sturm.hpp"

namespace cubiclines {

namespace {

// ===========================================================================
// F_p layer: dense vectors of long, index = exponent, p a small odd prime
// ===========================================================================
using FpPoly = std::vector<long>;

long mod_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return t < 0 ? t + p : t;
}

int fp_deg(const FpPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

FpPoly fp_trim(FpPoly f) {
    f.resize(static_cast<std::size_t>(fp_deg(f) + 1));
    return f;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (fp_deg(a) < 0 || fp_deg(b) < 0) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<long>(
                (static_cast<__int128>(a[i]) * b[j] + r[i + j]) % p);
    }
    return fp_trim(r);
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        long av = i < a.size() ? a[i] : 0;
        long bv = i < b.size() ? b[i] : 0;
        r[i] = ((av - bv) % p + p) % p;
    }
    return fp_trim(r);
}

FpPoly fp_monic(FpPoly f, long p) {
    int d = fp_deg(f);
    if (d < 0) return f;
    long inv = mod_inv(f[d], p);
    for (auto& c : f)
        c = static_cast<long>(static_cast<__int128>(c) * inv % p);
    return fp_trim(f);
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, long p) {
    int db = fp_deg(b);
    long inv = mod_inv(b[db], p);
    int da = fp_deg(a);
    if (da < db) return {{}, fp_trim(a)};
    FpPoly q(static_cast<std::size_t>(da - db + 1), 0);
    while ((da = fp_deg(a)) >= db) {
        long c = static_cast<long>(static_cast<__int128>(a[da]) * inv % p);
        q[da - db] = c;
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = static_cast<long>(
                ((a[da - db + i] - static_cast<__int128>(c) * b[i]) % p + p) % p);
    }
    return {fp_trim(q), fp_trim(a)};
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b, long p) { return fp_divmod(a, b, p).second; }
FpPoly fp_divexact(const FpPoly& a, const FpPoly& b, long p) { return fp_divmod(a, b, p).first; }

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    if (fp_deg(a) < fp_deg(b)) a.swap(b);
    while (fp_deg(b) >= 0) {
        FpPoly r = fp_rem(a, b, p);
        a.swap(b);
        b.swap(r);
    }
    return fp_monic(a, p);
}

FpPoly fp_powmod(const FpPoly& base, const Z& exp, const FpPoly& mod, long p) {
    FpPoly result{1};
    FpPoly b = fp_rem(base, mod, p);
    Z e = exp;
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = fp_rem(fp_mul(result, b, p), mod, p);
        b = fp_rem(fp_mul(b, b, p), mod, p);
        e >>= 1;
    }
    return result;
}

FpPoly fp_derivative(const FpPoly& f, long p) {
    FpPoly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(static_cast<long>(static_cast<__int128>(f[i]) * static_cast<long>(i % p) % p));
    return fp_trim(d);
}

// ===========================================================================
// Cantor-Zassenhaus: f monic squarefree mod p -> monic irreducibles
// ===========================================================================
void fp_edf(const FpPoly& f, int d, long p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    int n = fp_deg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    Z pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    Z exp = (pd - 1) / 2;
    while (true) {
        FpPoly a(static_cast<std::size_t>(n), 0);
        for (auto& c : a) c = static_cast<long>(rng() % static_cast<unsigned long>(p));
        if (fp_deg(a) < 1) continue;
        FpPoly b = fp_powmod(a, exp, f, p);
        b = fp_sub(b, FpPoly{1}, p);
        FpPoly h = fp_gcd(f, b, p);
        int dh = fp_deg(h);
        if (dh > 0 && dh < n) {
            fp_edf(h, d, p, rng, out);
            fp_edf(fp_monic(fp_divexact(f, h, p), p), d, p, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> fp_factor_squarefree(FpPoly f, long p) {
    f = fp_monic(f, p);
    std::vector<FpPoly> out;
    std::mt19937_64 rng(0x5eedf00dULL);
    // distinct-degree decomposition
    FpPoly x{0, 1};
    FpPoly h = fp_rem(x, f, p);
    int i = 1;
    while (fp_deg(f) >= 2 * i) {
        h = fp_powmod(h, Z(p), f, p);
        FpPoly g = fp_gcd(f, fp_sub(h, x, p), p);
        if (fp_deg(g) > 0) {
            fp_edf(g, i, p, rng, out);
            f = fp_monic(fp_divexact(f, g, p), p);
            h = fp_rem(h, f, p);
        }
        ++i;
    }
    if (fp_deg(f) > 0) out.push_back(f);
    return out;
}

// ===========================================================================
// Integer dense layer for Hensel lifting (coefficients canonical in [0, M))
// ===========================================================================
using ZPoly = std::vector<Z>;

int z_deg(const ZPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (sgn(f[i]) != 0) return i;
    return -1;
}

ZPoly z_trim(ZPoly f) {
    f.resize(static_cast<std::size_t>(z_deg(f) + 1));
    return f;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (z_deg(a) < 0 || z_deg(b) < 0) return {};
    ZPoly r(a.size() + b.size() - 1, Z(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return z_trim(r);
}

ZPoly z_mod(ZPoly f, const Z& m) {
    for (auto& c : f) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    return z_trim(f);
}

ZPoly z_center(ZPoly f, const Z& m) {
    Z half = m / 2;
    for (auto& c : f) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (cmp(c, half) > 0) c -= m;
    }
    return z_trim(f);
}

// division by a monic divisor; returns {quotient, remainder} over Z
std::pair<ZPoly, ZPoly> z_divmod_monic(ZPoly a, const ZPoly& b) {
    int db = z_deg(b);
    int da = z_deg(a);
    if (da < db) return {{}, z_trim(a)};
    ZPoly q(static_cast<std::size_t>(da - db + 1), Z(0));
    while ((da = z_deg(a)) >= db) {
        Z c = a[da];
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
    }
    return {z_trim(q), z_trim(a)};
}

FpPoly z_to_fp(const ZPoly& f, long p) {
    FpPoly r(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Z m = f[i] % p;
        long v = static_cast<long>(m.get_si());
        if (v < 0) v += p;
        r[i] = v;
    }
    return fp_trim(r);
}

ZPoly fp_to_z(const FpPoly& f) {
    ZPoly r;
    r.reserve(f.size());
    for (long c : f) r.push_back(Z(c));
    return z_trim(r);
}

// Bezout over F_p: s*a + t*b = 1 for coprime a, b
std::pair<FpPoly, FpPoly> fp_bezout(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (fp_deg(r1) >= 0) {
        auto [q, r] = fp_divmod(r0, r1, p);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    // r0 is a nonzero constant
    long inv = mod_inv(r0[0], p);
    auto scale = [&](FpPoly f) {
        for (auto& c : f) c = static_cast<long>(static_cast<__int128>(c) * inv % p);
        return f;
    };
    return {scale(s0), scale(t0)};
}

// linear Hensel lift: F monic (canonical mod `target`), F = G0*H0 mod p
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& F, const FpPoly& G0, const FpPoly& H0, long p,
                                    const Z& target) {
    auto [s, t] = fp_bezout(G0, H0, p);
    ZPoly G = fp_to_z(G0), H = fp_to_z(H0);
    Z M(p);
    while (cmp(M, target) < 0) {
        Z next = M * p;
        // e = (F - G*H)/M mod p
        ZPoly diff = z_mod([&] {
            ZPoly d = z_mul(G, H);
            ZPoly r(std::max(F.size(), d.size()), Z(0));
            for (std::size_t i = 0; i < r.size(); ++i) {
                Z fv = i < F.size() ? F[i] : Z(0);
                Z dv = i < d.size() ? d[i] : Z(0);
                r[i] = fv - dv;
            }
            return r;
        }(), next);
        FpPoly ebar;
        {
            ZPoly e(diff.size());
            for (std::size_t i = 0; i < diff.size(); ++i) e[i] = diff[i] / M;
            ebar = z_to_fp(e, p);
        }
        FpPoly u = fp_rem(fp_mul(t, ebar, p), G0, p);
        FpPoly w = fp_divexact(fp_sub(ebar, fp_mul(u, H0, p), p), G0, p);
        ZPoly zu = fp_to_z(u), zw = fp_to_z(w);
        if (G.size() < zu.size()) G.resize(zu.size(), Z(0));
        for (std::size_t i = 0; i < zu.size(); ++i) G[i] += M * zu[i];
        if (H.size() < zw.size()) H.resize(zw.size(), Z(0));
        for (std::size_t i = 0; i < zw.size(); ++i) H[i] += M * zw[i];
        M = next;
    }
    return {z_trim(G), z_trim(H)};
}

// multifactor lift: F monic mod target, base factors monic coprime mod p
void hensel_tree(const ZPoly& F, const std::vector<FpPoly>& parts, long p, const Z& target,
                 std::vector<ZPoly>& out) {
    if (parts.size() == 1) {
        out.push_back(z_mod(F, target));
        return;
    }
    std::size_t half = parts.size() / 2;
    FpPoly G0{1}, H0{1};
    for (std::size_t i = 0; i < half; ++i) G0 = fp_mul(G0, parts[i], p);
    for (std::size_t i = half; i < parts.size(); ++i) H0 = fp_mul(H0, parts[i], p);
    auto [G, H] = hensel_pair(F, G0, H0, p, target);
    std::vector<FpPoly> left(parts.begin(), parts.begin() + static_cast<long>(half));
    std::vector<FpPoly> right(parts.begin() + static_cast<long>(half), parts.end());
    hensel_tree(G, left, p, target, out);
    hensel_tree(H, right, p, target, out);
}

// ===========================================================================
// Univariate factorization over Q
// ===========================================================================

// dense rational -> primitive integer with positive leading coefficient
ZPoly primitivize(const DensePoly& f) {
    int d = dense_degree(f);
    if (d < 0) return {};
    Z num_gcd = 0, den_lcm = 1;
    for (const auto& c : f) {
        Z n = c.get_num(), dd = c.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), dd.get_mpz_t());
    }
    Q scale(den_lcm, num_gcd); // positive: gcd and lcm are nonnegative
    scale.canonicalize();
    if (sgn(f[d]) < 0) scale = -scale;
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Q v = f[i] * scale;
        r[i] = v.get_num(); // exact integer: denominator is 1
    }
    return z_trim(r);
}

// Yun's squarefree decomposition (f nonconstant): pairwise coprime monic-ish
std::vector<std::pair<DensePoly, int>> yun(const DensePoly& f) {
    std::vector<std::pair<DensePoly, int>> out;
    DensePoly fp = dense_derivative(f);
    DensePoly a = dense_gcd(f, fp);
    DensePoly b = dense_divmod(f, a).first;
    DensePoly c = dense_divmod(fp, a).first;
    DensePoly d = c;
    {
        DensePoly bp = dense_derivative(b);
        DensePoly nd(std::max(d.size(), bp.size()), Q(0));
        for (std::size_t i = 0; i < nd.size(); ++i) {
            Q cv = i < d.size() ? d[i] : Q(0);
            Q bv = i < bp.size() ? bp[i] : Q(0);
            nd[i] = cv - bv;
        }
        d = dense_trim(nd);
    }
    int i = 1;
    while (dense_degree(b) > 0) {
        DensePoly ai = dense_gcd(b, d);
        if (dense_degree(ai) > 0) out.push_back({ai, i});
        b = dense_divmod(b, ai).first;
        DensePoly cq = dense_divmod(d, ai).first;
        DensePoly bp = dense_derivative(b);
        DensePoly nd(std::max(cq.size(), bp.size()), Q(0));
        for (std::size_t k = 0; k < nd.size(); ++k) {
            Q cv = k < cq.size() ? cq[k] : Q(0);
            Q bv = k < bp.size() ? bp[k] : Q(0);
            nd[k] = cv - bv;
        }
        d = dense_trim(nd);
        ++i;
    }
    return out;
}

// irreducible factors of a squarefree primitive integer polynomial
std::vector<ZPoly> factor_squarefree_z(const ZPoly& G) {
    const int n = z_deg(G);
    if (n <= 0) return {};
    if (n == 1) return {G};
    // monicize: F*(x) = lc^(n-1) G(x/lc), integral and monic
    const Z lc = G[static_cast<std::size_t>(n)];
    ZPoly Fm(G.size());
    {
        Z power = 1;
        // coefficient of x^i gets lc^(n-1-i)
        std::vector<Z> powers(static_cast<std::size_t>(n), Z(1));
        for (int i = 1; i < n; ++i) powers[static_cast<std::size_t>(i)] = powers[i - 1] * lc;
        for (int i = 0; i <= n; ++i)
            Fm[static_cast<std::size_t>(i)] =
                (i == n) ? Z(1) : G[static_cast<std::size_t>(i)] * powers[static_cast<std::size_t>(n - 1 - i)];
    }
    // prime choice: squarefree reduction
    long p = 0;
    static const long primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,
                                  41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,
                                  89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139};
    std::vector<FpPoly> base;
    for (long cand : primes) {
        FpPoly fbar = z_to_fp(Fm, cand);
        if (fp_deg(fbar) != n) continue; // cannot happen: monic
        FpPoly g = fp_gcd(fbar, fp_derivative(fbar, cand), cand);
        if (fp_deg(g) != 0) continue;
        base = fp_factor_squarefree(fbar, cand);
        p = cand;
        break;
    }
    if (p == 0) throw InternalInconsistency("no usable prime for factorization");
    if (base.size() == 1) return {G};
    // Mignotte-style bound for factors of Fm
    Z norm2 = 0;
    for (const auto& c : Fm) norm2 += c * c;
    Z root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    Z bound = root;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    Z target(p);
    while (cmp(target, 2 * bound + 1) <= 0) target *= p;
    // canonical order of base factors for determinism
    std::sort(base.begin(), base.end());
    std::vector<ZPoly> lifted;
    hensel_tree(z_mod(Fm, target), base, p, target, lifted);
    // Zassenhaus recombination
    std::vector<int> alive(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
    ZPoly rem = Fm;
    std::vector<ZPoly> monic_factors;
    bool progress = true;
    while (progress && static_cast<int>(alive.size()) > 0) {
        progress = false;
        int r = static_cast<int>(alive.size());
        for (int s = 1; 2 * s <= r && !progress; ++s) {
            // iterate combinations of size s
            std::vector<int> idx(static_cast<std::size_t>(s));
            for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                ZPoly cand{Z(1)};
                for (int i : idx) cand = z_mod(z_mul(cand, lifted[static_cast<std::size_t>(alive[static_cast<std::size_t>(i)])]), target);
                cand = z_center(cand, target);
                if (z_deg(cand) <= z_deg(rem)) {
                    auto [q, rr] = z_divmod_monic(rem, cand);
                    if (z_deg(rr) < 0) {
                        monic_factors.push_back(cand);
                        rem = q;
                        std::vector<int> na;
                        for (int i = 0; i < r; ++i)
                            if (std::find(idx.begin(), idx.end(), i) == idx.end())
                                na.push_back(alive[static_cast<std::size_t>(i)]);
                        alive.swap(na);
                        progress = true;
                        break;
                    }
                }
                // next combination
                int pos = s - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == r - s + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int j = pos + 1; j < s; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    if (z_deg(rem) > 0) monic_factors.push_back(rem);
    // map back: g(x) = primitive part of Fj(lc * x)
    std::vector<ZPoly> out;
    for (const auto& Fj : monic_factors) {
        int dj = z_deg(Fj);
        ZPoly g(Fj.size());
        Z power = 1;
        for (int i = 0; i <= dj; ++i) {
            g[static_cast<std::size_t>(i)] = Fj[static_cast<std::size_t>(i)] * power;
            power *= lc;
        }
        // integer content removal, sign to positive lc
        Z cont = 0;
        for (const auto& c : g) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
        if (sgn(g[static_cast<std::size_t>(dj)]) < 0) cont = -cont;
        for (auto& c : g) c /= cont;
        out.push_back(z_trim(g));
    }
    return out;
}

// full univariate factorization of a dense rational polynomial (nonconstant)
std::vector<std::pair<ZPoly, int>> factor_univariate(const DensePoly& f) {
    std::vector<std::pair<ZPoly, int>> out;
    for (const auto& [sf, mult] : yun(f)) {
        ZPoly G = primitivize(sf);
        for (auto& irr : factor_squarefree_z(G)) out.push_back({irr, mult});
    }
    return out;
}

Poly zpoly_to_mpoly(const ZPoly& f, Var v) {
    Poly r;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (sgn(f[i]) != 0) r += Poly::term(Mono::of(v, static_cast<int>(i)), Q(f[i]));
    return r;
}

// ===========================================================================
// Binary forms: homogeneous in (va, vb), no monomial content
// ===========================================================================
std::vector<std::pair<Poly, int>> factor_binary_form(const Poly& F, Var va, Var vb) {
    const int d = F.degree();
    DensePoly u(static_cast<std::size_t>(d + 1), Q(0));
    for (const auto& t : F.terms()) u[t.first.e[va]] = t.second;
    std::vector<std::pair<Poly, int>> out;
    for (const auto& [zf, mult] : factor_univariate(u)) {
        int dj = z_deg(zf);
        Poly g;
        for (int i = 0; i <= dj; ++i) {
            if (sgn(zf[static_cast<std::size_t>(i)]) == 0) continue;
            Mono m;
            m.e[va] = static_cast<std::uint8_t>(i);
            m.e[vb] = static_cast<std::uint8_t>(dj - i);
            g += Poly::term(m, Q(zf[static_cast<std::size_t>(i)]));
        }
        out.push_back({normalized(g), mult});
    }
    return out;
}

// ===========================================================================
// Bivariate factorization (vx main, vy auxiliary)
// ===========================================================================

Poly truncate_var(const Poly& f, Var v, int K) {
    Poly r;
    for (const auto& t : f.terms())
        if (t.first.e[v] < K) r += Poly::term(t.first, t.second);
    return r;
}

// Bezout over Q[x] dense: s*a + t*b = 1 (a, b coprime)
std::pair<DensePoly, DensePoly> dense_bezout(const DensePoly& a, const DensePoly& b) {
    DensePoly r0 = dense_trim(a), r1 = dense_trim(b);
    DensePoly s0{Q(1)}, s1{}, t0{}, t1{Q(1)};
    auto submul = [](const DensePoly& u, const DensePoly& q, const DensePoly& v) {
        DensePoly qv = dense_mul(q, v);
        DensePoly r(std::max(u.size(), qv.size()), Q(0));
        for (std::size_t i = 0; i < r.size(); ++i) {
            Q uv = i < u.size() ? u[i] : Q(0);
            Q qq = i < qv.size() ? qv[i] : Q(0);
            r[i] = uv - qq;
        }
        return dense_trim(r);
    };
    while (dense_degree(r1) >= 0) {
        auto [q, r] = dense_divmod(r0, r1);
        DensePoly s2 = submul(s0, q, s1);
        DensePoly t2 = submul(t0, q, t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    Q c = r0[static_cast<std::size_t>(dense_degree(r0))];
    for (auto& v : s0) v /= c;
    for (auto& v : t0) v /= c;
    return {s0, t0};
}

// linear (vy)-adic lift of F = G*H mod vy, F monic in vx
std::pair<Poly, Poly> series_pair_lift(const Poly& F, const DensePoly& g0, const DensePoly& h0,
                                       Var vx, Var vy, int K) {
    auto [s, t] = dense_bezout(g0, h0);
    Poly G = Poly::from_dense(g0, vx);
    Poly H = Poly::from_dense(h0, vx);
    for (int j = 1; j < K; ++j) {
        Poly e = truncate_var(F - G * H, vy, j + 1);
        Poly ej = e.coeff_of(vy, j);
        if (ej.is_zero()) continue;
        DensePoly ejd = ej.to_dense(vx);
        DensePoly u = dense_divmod(dense_mul(t, ejd), g0).second;
        DensePoly w = dense_divmod([&] {
            DensePoly uh = dense_mul(u, h0);
            DensePoly r(std::max(ejd.size(), uh.size()), Q(0));
            for (std::size_t i = 0; i < r.size(); ++i) {
                Q a = i < ejd.size() ? ejd[i] : Q(0);
                Q b = i < uh.size() ? uh[i] : Q(0);
                r[i] = a - b;
            }
            return dense_trim(r);
        }(), g0).first;
        G += Poly::from_dense(u, vx) * Poly::variable(vy, j);
        H += Poly::from_dense(w, vx) * Poly::variable(vy, j);
    }
    return {G, H};
}

void series_tree(const Poly& F, const std::vector<DensePoly>& parts, Var vx, Var vy, int K,
                 std::vector<Poly>& out) {
    if (parts.size() == 1) {
        out.push_back(truncate_var(F, vy, K));
        return;
    }
    std::size_t half = parts.size() / 2;
    DensePoly g0{Q(1)}, h0{Q(1)};
    for (std::size_t i = 0; i < half; ++i) g0 = dense_mul(g0, parts[i]);
    for (std::size_t i = half; i < parts.size(); ++i) h0 = dense_mul(h0, parts[i]);
    auto [G, H] = series_pair_lift(F, g0, h0, vx, vy, K);
    std::vector<DensePoly> left(parts.begin(), parts.begin() + static_cast<long>(half));
    std::vector<DensePoly> right(parts.begin() + static_cast<long>(half), parts.end());
    series_tree(G, left, vx, vy, K, out);
    series_tree(H, right, vx, vy, K, out);
}

// irreducible factors of a primitive squarefree bivariate polynomial
std::vector<Poly> factor_bivariate_squarefree(const Poly& F, Var vx, Var vy) {
    const int n = F.degree(vx);
    const Poly Lc = F.coeff_of(vx, n);
    // choose specialization point y0
    Q y0;
    DensePoly spec;
    for (long trial = 0;; ++trial) {
        long v = (trial % 2 == 0) ? trial / 2 : -(trial / 2 + 1);
        Q cand(v);
        Poly lp = Lc.substitute(vy, Poly::constant(cand));
        if (lp.is_zero()) continue;
        Poly sp = F.substitute(vy, Poly::constant(cand));
        DensePoly sd = sp.to_dense(vx);
        if (dense_degree(sd) != n) continue;
        DensePoly g = dense_gcd(sd, dense_derivative(sd));
        if (dense_degree(g) != 0) continue;
        y0 = cand;
        spec = sd;
        break;
    }
    auto uni = factor_univariate(spec);
    if (uni.size() == 1 && uni[0].second == 1) return {normalized(F)};
    // monicize: Fhat(X, y) = Lc^(n-1) F(X/Lc, y) = X^n + sum_{i<n} c_i(y) Lc^(n-1-i) X^i
    Poly Fhat = Poly::variable(vx, n);
    {
        std::vector<Poly> lpow{Poly::constant(Q(1))};
        for (int i = 1; i < n; ++i) lpow.push_back(lpow.back() * Lc);
        for (int i = 0; i < n; ++i) {
            Poly ci = F.coeff_of(vx, i);
            if (ci.is_zero()) continue;
            Fhat += ci * lpow[static_cast<std::size_t>(n - 1 - i)] * Poly::variable(vx, i);
        }
    }
    // shift so the base point sits at vy = 0
    Poly Ftilde = Fhat.substitute(vy, Poly::variable(vy) + Poly::constant(y0));
    const int K = Ftilde.degree(vy) + 1;
    // base factors: monic rational versions of the specialized factors,
    // re-monicized against the monicization transform
    DensePoly base_poly = Ftilde.substitute(vy, Poly::constant(Q(0))).to_dense(vx);
    auto base_fact = factor_univariate(base_poly);
    std::vector<DensePoly> parts;
    for (const auto& [zf, mult] : base_fact) {
        // squarefree: mult must be 1
        DensePoly d(zf.size());
        for (std::size_t i = 0; i < zf.size(); ++i) d[i] = Q(zf[i]);
        Q lc = d[static_cast<std::size_t>(dense_degree(d))];
        for (auto& c : d) c /= lc;
        parts.push_back(d);
    }
    std::sort(parts.begin(), parts.end(), [](const DensePoly& a, const DensePoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    std::vector<Poly> lifted;
    series_tree(truncate_var(Ftilde, vy, K), parts, vx, vy, K, lifted);
    // recombination over subsets
    std::vector<int> alive(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
    Poly remhat = Fhat;
    std::vector<Poly> out;
    Poly shift_back = Poly::variable(vy) - Poly::constant(y0);
    bool progress = true;
    while (progress && !alive.empty()) {
        progress = false;
        int r = static_cast<int>(alive.size());
        for (int s = 1; 2 * s <= r && !progress; ++s) {
            std::vector<int> idx(static_cast<std::size_t>(s));
            for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                Poly cand = Poly::constant(Q(1));
                for (int i : idx)
                    cand = truncate_var(cand * lifted[static_cast<std::size_t>(alive[static_cast<std::size_t>(i)])],
                                        vy, K);
                Poly chat = cand.substitute(vy, shift_back);
                Poly quot;
                if (Poly::try_exact_div(remhat, chat, quot)) {
                    Poly g = chat.substitute(vx, Lc * Poly::variable(vx));
                    out.push_back(normalized(g));
                    remhat = quot;
                    std::vector<int> na;
                    for (int i = 0; i < r; ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end())
                            na.push_back(alive[static_cast<std::size_t>(i)]);
                    alive.swap(na);
                    progress = true;
                    break;
                }
                int pos = s - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == r - s + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int j = pos + 1; j < s; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    if (remhat.degree(vx) > 0) {
        Poly g = remhat.substitute(vx, Lc * Poly::variable(vx));
        out.push_back(normalized(g));
    }
    return out;
}

std::vector<std::pair<Poly, int>> factor_bivariate(const Poly& f, Var vx, Var vy) {
    std::vector<std::pair<Poly, int>> out;
    // content w.r.t. the main variable lives in vy only: univariate recursion
    Poly cont = content_wrt(f, vx);
    Poly pp = Poly::exact_div(f, cont);
    if (!cont.is_constant()) {
        for (const auto& [zf, mult] : factor_univariate(cont.to_dense(vy)))
            out.push_back({zpoly_to_mpoly(zf, vy), mult});
    }
    if (pp.degree() == 0) return out;
    // squarefree part, then exponents by trial division
    Poly sf = squarefree_part(pp);
    std::vector<Poly> irr;
    if (sf.degree(vx) == 0) {
        // cannot happen: pp primitive w.r.t. vx with positive degree
        throw InternalInconsistency("bivariate squarefree part lost the main variable");
    }
    if (sf.degree(vy) == 0) {
        for (const auto& [zf, mult] : factor_univariate(sf.to_dense(vx))) {
            (void)mult;
            irr.push_back(zpoly_to_mpoly(zf, vx));
        }
    } else {
        irr = factor_bivariate_squarefree(sf, vx, vy);
    }
    for (const auto& g : irr) {
        int e = divisor_exponent(pp, g);
        out.push_back({g, e});
    }
    return out;
}

// ===========================================================================
// Driver
// ===========================================================================

std::vector<std::pair<Poly, int>> factor_core(const Poly& core);

// homogeneous ternary: dehomogenize along the last present variable
std::vector<std::pair<Poly, int>> factor_ternary_homogeneous(const Poly& core,
                                                             const std::vector<Var>& vars) {
    Var vz = vars.back();
    Poly dehom = core.substitute(vz, Poly::constant(Q(1)));
    const int d = core.degree();
    Factorization sub = factor(dehom);
    std::vector<std::pair<Poly, int>> out;
    int total = 0;
    for (const auto& uf : sub.factors) {
        // re-homogenize each factor to its own total degree
        const int dg = uf.factor.degree();
        Poly hom;
        for (const auto& t : uf.factor.terms()) {
            Mono m = t.first;
            m.e[vz] = static_cast<std::uint8_t>(m.e[vz] + (dg - t.first.total()));
            hom += Poly::term(m, t.second);
        }
        out.push_back({normalized(hom), uf.exponent});
        total += dg * uf.exponent;
    }
    if (total != d)
        throw InternalInconsistency("ternary homogeneous factorization degree mismatch");
    return out;
}

std::vector<std::pair<Poly, int>> factor_core(const Poly& core) {
    if (core.degree() == 1) return {{core, 1}}; // linear: irreducible as-is
    std::vector<Var> vars;
    for (int v = 0; v < kNumVars; ++v)
        if (core.depends_on(static_cast<Var>(v))) vars.push_back(static_cast<Var>(v));
    if (vars.size() == 1) {
        std::vector<std::pair<Poly, int>> out;
        for (const auto& [zf, mult] : factor_univariate(core.to_dense(vars[0])))
            out.push_back({zpoly_to_mpoly(zf, vars[0]), mult});
        return out;
    }
    // homogeneity in the present variables
    bool homogeneous = true;
    const int d = core.degree();
    for (const auto& t : core.terms())
        if (t.first.total() != d) {
            homogeneous = false;
            break;
        }
    if (vars.size() == 2) {
        if (homogeneous) return factor_binary_form(core, vars[0], vars[1]);
        // main variable: the one with the smaller positive degree
        Var vx = vars[0], vy = vars[1];
        if (core.degree(vx) > core.degree(vy)) std::swap(vx, vy);
        return factor_bivariate(core, vx, vy);
    }
    if (vars.size() == 3 && homogeneous) return factor_ternary_homogeneous(core, vars);
    throw UnsupportedShape("factorization request with more than 2 essential variables");
}

} // namespace

Factorization factor(const Poly& f) {
    Factorization out;
    if (f.is_zero()) {
        out.constant = Q(0);
        return out;
    }
    if (f.is_constant()) {
        out.constant = f.lc();
        return out;
    }
    out.constant = content(f);
    Poly core = Poly::exact_div(f, Poly::constant(out.constant));
    // monomial content
    for (int v = 0; v < kNumVars; ++v) {
        if (!core.depends_on(static_cast<Var>(v))) continue;
        int mn = 1 << 30;
        for (const auto& t : core.terms()) mn = std::min(mn, static_cast<int>(t.first.e[v]));
        if (mn > 0) {
            out.factors.push_back({Poly::variable(static_cast<Var>(v)), mn});
            core = Poly::exact_div(core, Poly::variable(static_cast<Var>(v), mn));
        }
    }
    if (!core.is_constant()) {
        if (core.degree() > kFactorDegreeCap)
            throw UnsupportedShape("total degree above the factorization cap");
        for (auto& [g, e] : factor_core(core)) out.factors.push_back({g, e});
    } else if (!CoeffTraits<Q>::eq(core.lc(), Q(1))) {
        out.constant *= core.lc();
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const UFactor& a, const UFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.str() < b.factor.str();
    });
    if (out.expand() != f) throw InternalInconsistency("factorization does not multiply back");
    return out;
}

int divisor_exponent(const Poly& f, const Poly& divisor) {
    if (divisor.is_constant()) throw InvalidIndex("exponent of a constant divisor");
    int e = 0;
    Poly cur = f;
    Poly q;
    while (Poly::try_exact_div(cur, divisor, q)) {
        cur = q;
        ++e;
    }
    return e;
}

} // namespace cubiclines
