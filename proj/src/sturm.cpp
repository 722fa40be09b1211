#include "cubiclines/sturm.hpp"

#include <algorithm>

#include "cubiclines/factor.hpp"

namespace cubiclines {

int dense_degree(const DensePoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (sgn(f[i]) != 0) return i;
    return -1;
}

DensePoly dense_trim(DensePoly f) {
    f.resize(static_cast<std::size_t>(dense_degree(f) + 1));
    return f;
}

DensePoly dense_derivative(const DensePoly& f) {
    DensePoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Q(static_cast<long>(i)));
    return dense_trim(d);
}

Q dense_eval(const DensePoly& f, const Q& x) {
    Q acc(0);
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) acc = acc * x + f[i];
    return acc;
}

DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    if (dense_degree(a) < 0 || dense_degree(b) < 0) return {};
    DensePoly r(a.size() + b.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return dense_trim(r);
}

std::pair<DensePoly, DensePoly> dense_divmod(const DensePoly& f, const DensePoly& g) {
    int dg = dense_degree(g);
    if (dg < 0) throw DivisibilityError("division by zero polynomial");
    DensePoly r = dense_trim(f);
    int dr = dense_degree(r);
    if (dr < dg) return {{}, r};
    DensePoly q(static_cast<std::size_t>(dr - dg + 1), Q(0));
    while ((dr = dense_degree(r)) >= dg) {
        Q c = r[dr] / g[dg];
        q[dr - dg] = c;
        for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= c * g[i];
    }
    return {dense_trim(q), dense_trim(r)};
}

DensePoly dense_gcd(const DensePoly& f, const DensePoly& g) {
    DensePoly a = dense_trim(f), b = dense_trim(g);
    if (dense_degree(a) < 0) a.swap(b);
    while (dense_degree(b) >= 0) {
        DensePoly r = dense_divmod(a, b).second;
        a.swap(b);
        b.swap(r);
    }
    int d = dense_degree(a);
    if (d < 0) return {};
    Q lc = a[d];
    for (auto& c : a) c /= lc;
    return a;
}

DensePoly dense_squarefree_part(const DensePoly& f) {
    DensePoly t = dense_trim(f);
    int d = dense_degree(t);
    if (d <= 0) return t;
    DensePoly g = dense_gcd(t, dense_derivative(t));
    if (dense_degree(g) == 0) {
        Q lc = t[d];
        for (auto& c : t) c /= lc;
        return t;
    }
    DensePoly q = dense_divmod(t, g).first;
    int dq = dense_degree(q);
    Q lc = q[dq];
    for (auto& c : q) c /= lc;
    return q;
}

namespace {

std::vector<DensePoly> sturm_chain(const DensePoly& f) {
    std::vector<DensePoly> chain;
    chain.push_back(dense_trim(f));
    chain.push_back(dense_derivative(f));
    while (dense_degree(chain.back()) >= 0) {
        const DensePoly& a = chain[chain.size() - 2];
        const DensePoly& b = chain.back();
        if (dense_degree(b) < 0) break;
        DensePoly r = dense_divmod(a, b).second;
        if (dense_degree(r) < 0) break;
        for (auto& c : r) c = -c;
        // scale to integer-primitive to keep numbers small
        Z num_gcd = 0, den_lcm = 1;
        for (const auto& c : r) {
            Z n = c.get_num(), d = c.get_den();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
        if (sgn(num_gcd) != 0) {
            Q scale(den_lcm, num_gcd);
            scale.canonicalize();
            if (sgn(scale) < 0) scale = -scale;
            for (auto& c : r) c *= scale;
        }
        chain.push_back(dense_trim(r));
    }
    return chain;
}

int sign_at(const DensePoly& f, const Q& x) { return sgn(dense_eval(f, x)); }

int sign_at_neg_inf(const DensePoly& f) {
    int d = dense_degree(f);
    if (d < 0) return 0;
    int s = sgn(f[d]);
    return (d % 2 == 0) ? s : -s;
}
int sign_at_pos_inf(const DensePoly& f) {
    int d = dense_degree(f);
    return d < 0 ? 0 : sgn(f[d]);
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

int real_root_count(const DensePoly& f, std::optional<Q> lo, std::optional<Q> hi) {
    DensePoly sf = dense_squarefree_part(f);
    int d = dense_degree(sf);
    if (d <= 0) return 0;
    auto chain = sturm_chain(sf);
    auto vs_at = [&](const std::optional<Q>& pt, bool neg_inf) {
        std::vector<int> s;
        s.reserve(chain.size());
        for (const auto& p : chain) {
            if (pt)
                s.push_back(sign_at(p, *pt));
            else
                s.push_back(neg_inf ? sign_at_neg_inf(p) : sign_at_pos_inf(p));
        }
        return variations(s);
    };
    // Sturm counts roots in (a, b]; an exact root at the left endpoint is
    // excluded, a root at the right endpoint included.  We want the open
    // interval, so subtract a right-endpoint root.
    int va = vs_at(lo, true);
    int vb = vs_at(hi, false);
    int count = va - vb;
    if (hi && sgn(dense_eval(sf, *hi)) == 0) --count;
    return count;
}

int real_root_count(const Poly& f, Var v) {
    return real_root_count(f.to_dense(v));
}

namespace {

// bisection isolation of a squarefree polynomial; exact roots are detected
// only when a midpoint lands on one
std::vector<RootInterval> isolate_bisect(const DensePoly& sf);

} // namespace

std::vector<RootInterval> isolate_real_roots(const DensePoly& f) {
    DensePoly sf = dense_squarefree_part(f);
    int d = dense_degree(sf);
    std::vector<RootInterval> out;
    if (d <= 0) return out;
    if (d > kFactorDegreeCap) return isolate_bisect(sf); // best-effort exactness
    // split off the rational roots exactly, then bisect the rootless rest
    std::vector<Q> exact;
    DensePoly rest{Q(1)};
    for (const auto& uf : factor(Poly::from_dense(sf, VarW)).factors) {
        auto dd = uf.factor.to_dense(VarW);
        if (dense_degree(dd) == 1)
            exact.push_back(-dd[0] / dd[1]);
        else
            rest = dense_mul(rest, dd);
    }
    std::sort(exact.begin(), exact.end(), [](const Q& a, const Q& b) { return cmp(a, b) < 0; });
    std::vector<RootInterval> ivs;
    if (dense_degree(rest) >= 1) ivs = isolate_bisect(rest);
    // shrink intervals until they neither contain nor touch an exact root
    for (auto& iv : ivs) {
        bool again = true;
        while (again) {
            again = false;
            for (const auto& r : exact)
                if (cmp(iv.lo, r) <= 0 && cmp(r, iv.hi) <= 0) {
                    iv = refine_interval(rest, iv);
                    again = true;
                    break;
                }
        }
        out.push_back(iv);
    }
    for (const auto& r : exact) out.push_back({r, r});
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return cmp(a.lo, b.lo) < 0; });
    return out;
}

namespace {

std::vector<RootInterval> isolate_bisect(const DensePoly& sf) {
    int d = dense_degree(sf);
    std::vector<RootInterval> out;
    if (d <= 0) return out;
    // Cauchy bound
    Q bound(1);
    for (int i = 0; i < d; ++i) {
        Q a = abs(sf[i] / sf[d]);
        if (cmp(a, bound) > 0) bound = a;
    }
    bound += 1;
    // find a non-root endpoint beyond the bound (bound itself cannot be a
    // root, by construction)
    Q lo = -bound, hi = bound;
    struct Seg {
        Q lo, hi;
        int count;
    };
    std::vector<Seg> stack;
    int total = real_root_count(sf, lo, hi);
    // roots exactly at +-bound are impossible; all real roots lie inside
    if (total > 0) stack.push_back({lo, hi, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1 && sgn(dense_eval(sf, s.lo)) * sgn(dense_eval(sf, s.hi)) < 0) {
            // sign change with a single root: isolated
            out.push_back({s.lo, s.hi});
            continue;
        }
        Q mid = (s.lo + s.hi) / 2;
        if (sgn(dense_eval(sf, mid)) == 0) {
            out.push_back({mid, mid});
            // recurse into halves excluding the exact root: shrink endpoints
            // toward mid until they are non-roots (finitely many roots)
            Q left_hi = mid, right_lo = mid;
            Q width = (s.hi - s.lo) / 4;
            do {
                left_hi = mid - width;
                width /= 2;
            } while (sgn(dense_eval(sf, left_hi)) == 0);
            width = (s.hi - s.lo) / 4;
            do {
                right_lo = mid + width;
                width /= 2;
            } while (sgn(dense_eval(sf, right_lo)) == 0);
            int cl = real_root_count(sf, s.lo, left_hi);
            int cr = real_root_count(sf, right_lo, s.hi);
            // roots between left_hi and mid (exclusive) or mid and right_lo
            // would be missed; count them and widen if needed
            int gap_l = real_root_count(sf, left_hi, mid);
            int gap_r = real_root_count(sf, mid, right_lo);
            while (gap_l > 0) {
                width = (mid - left_hi) / 2;
                Q cand = mid - width;
                if (sgn(dense_eval(sf, cand)) != 0) left_hi = cand;
                else width /= 2;
                gap_l = real_root_count(sf, left_hi, mid);
                cl = real_root_count(sf, s.lo, left_hi);
            }
            while (gap_r > 0) {
                width = (right_lo - mid) / 2;
                Q cand = mid + width;
                if (sgn(dense_eval(sf, cand)) != 0) right_lo = cand;
                else width /= 2;
                gap_r = real_root_count(sf, mid, right_lo);
                cr = real_root_count(sf, right_lo, s.hi);
            }
            if (cl > 0) stack.push_back({s.lo, left_hi, cl});
            if (cr > 0) stack.push_back({right_lo, s.hi, cr});
            continue;
        }
        int cl = real_root_count(sf, s.lo, mid);
        int cr = s.count - cl;
        if (cl == 1 && sgn(dense_eval(sf, s.lo)) * sgn(dense_eval(sf, mid)) < 0)
            out.push_back({s.lo, mid});
        else if (cl > 0)
            stack.push_back({s.lo, mid, cl});
        if (cr == 1 && sgn(dense_eval(sf, mid)) * sgn(dense_eval(sf, s.hi)) < 0)
            out.push_back({mid, s.hi});
        else if (cr > 0)
            stack.push_back({mid, s.hi, cr});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return cmp(a.lo, b.lo) < 0; });
    return out;
}

} // namespace

RootInterval refine_interval(const DensePoly& squarefree, const RootInterval& iv) {
    if (iv.exact()) return iv;
    Q mid = (iv.lo + iv.hi) / 2;
    int sm = sgn(dense_eval(squarefree, mid));
    if (sm == 0) return {mid, mid};
    int sl = sgn(dense_eval(squarefree, iv.lo));
    if (sl * sm < 0) return {iv.lo, mid};
    return {mid, iv.hi};
}

} // namespace cubiclines
