#pragma once
// ============================================================================
// Sparse multivariate polynomials over an exact coefficient field.
//
// Fixed variable alphabet {x, y, X, Y, Z, W}; term order is graded
// lexicographic with x > y > X > Y > Z > W.  Terms are stored sorted in
// descending order with no zero coefficients; equal representations are
// equal polynomials.
// ============================================================================

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubiclines/errors.hpp"
#include "cubiclines/rational.hpp"

namespace cubiclines {

enum Var : int { VarX = 0, VarY = 1, VarBX = 2, VarBY = 3, VarBZ = 4, VarW = 5 };
constexpr int kNumVars = 6;
inline const char* var_name(int v) {
    static const char* names[kNumVars] = {"x", "y", "X", "Y", "Z", "W"};
    return names[v];
}

// ---------------------------------------------------------------------------
// Monomial: exponent vector.  Packs into a 64-bit key whose numeric order is
// the graded-lex order (total degree first, then x, y, X, Y, Z, W).
// Exponents must stay below 256; intermediate blowups in scope stay far under.
// ---------------------------------------------------------------------------
struct Mono {
    std::array<std::uint8_t, kNumVars> e{};

    int total() const {
        int t = 0;
        for (int i = 0; i < kNumVars; ++i) t += e[i];
        return t;
    }
    std::uint64_t key() const {
        std::uint64_t k = static_cast<std::uint64_t>(total()) << 48;
        for (int i = 0; i < kNumVars; ++i)
            k |= static_cast<std::uint64_t>(e[i]) << (40 - 8 * i);
        return k;
    }
    static Mono from_key(std::uint64_t k) {
        Mono m;
        for (int i = 0; i < kNumVars; ++i)
            m.e[i] = static_cast<std::uint8_t>((k >> (40 - 8 * i)) & 0xff);
        return m;
    }
    static Mono one() { return Mono{}; }
    static Mono of(Var v, int pow = 1) {
        Mono m;
        m.e[v] = static_cast<std::uint8_t>(pow);
        return m;
    }
    Mono operator*(const Mono& o) const {
        Mono m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
        return m;
    }
    bool divides(const Mono& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // quotient o / this; caller checks divides().
    Mono quotient_into(const Mono& o) const {
        Mono m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
        return m;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
};

// ---------------------------------------------------------------------------
// Coefficient traits.  Q is specialized here; the quadratic-extension field
// specializes in its own header.
// ---------------------------------------------------------------------------
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Q> {
    static Q zero() { return Q(0); }
    static Q one() { return Q(1); }
    static Q from_int(long n) { return Q(n); }
    static bool is_zero(const Q& c) { return sgn(c) == 0; }
    static Q neg(const Q& c) { return Q(-c); }
    static Q add(const Q& a, const Q& b) { return Q(a + b); }
    static Q sub(const Q& a, const Q& b) { return Q(a - b); }
    static Q mul(const Q& a, const Q& b) { return Q(a * b); }
    static Q div(const Q& a, const Q& b) { return Q(a / b); }
    static bool eq(const Q& a, const Q& b) { return cmp(a, b) == 0; }
    static std::string str(const Q& c) { return q_str(c); }
    // printing helpers: sign splitting for "a - b" style output
    static bool is_negative_for_print(const Q& c) { return sgn(c) < 0; }
    static Q abs_for_print(const Q& c) { return Q(abs(c)); }
};

// ---------------------------------------------------------------------------
// MPolyT
// ---------------------------------------------------------------------------
template <class C>
class MPolyT {
  public:
    using Coeff = C;
    using Term = std::pair<Mono, C>;

    MPolyT() = default;

    static MPolyT zero() { return MPolyT(); }
    static MPolyT constant(const C& c) {
        MPolyT p;
        if (!CoeffTraits<C>::is_zero(c)) p.terms_.push_back({Mono::one(), c});
        return p;
    }
    static MPolyT variable(Var v, int pow = 1) {
        MPolyT p;
        if (pow < 0) throw InvalidDegree("negative power");
        if (pow == 0) return constant(CoeffTraits<C>::one());
        p.terms_.push_back({Mono::of(v, pow), CoeffTraits<C>::one()});
        return p;
    }
    static MPolyT term(const Mono& m, const C& c) {
        MPolyT p;
        if (!CoeffTraits<C>::is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Mono::one());
    }
    // leading term in graded-lex; polynomial must be nonzero
    const Mono& lm() const { return terms_.front().first; }
    const C& lc() const { return terms_.front().second; }

    int degree() const { return terms_.empty() ? -1 : terms_.front().first.total(); }
    int degree(Var v) const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.e[v]));
        return terms_.empty() ? -1 : d;
    }
    bool depends_on(Var v) const {
        for (const auto& t : terms_)
            if (t.first.e[v] > 0) return true;
        return false;
    }

    C coeff(const Mono& m) const {
        // binary search on descending keys
        std::uint64_t k = m.key();
        int lo = 0, hi = static_cast<int>(terms_.size()) - 1;
        while (lo <= hi) {
            int mid = (lo + hi) / 2;
            std::uint64_t mk = terms_[mid].first.key();
            if (mk == k) return terms_[mid].second;
            if (mk > k)
                lo = mid + 1;
            else
                hi = mid - 1;
        }
        return CoeffTraits<C>::zero();
    }

    MPolyT operator-() const {
        MPolyT r = *this;
        for (auto& t : r.terms_) t.second = CoeffTraits<C>::neg(t.second);
        return r;
    }

    MPolyT operator+(const MPolyT& o) const { return merged(o, false); }
    MPolyT operator-(const MPolyT& o) const { return merged(o, true); }

    MPolyT operator*(const MPolyT& o) const {
        if (is_zero() || o.is_zero()) return MPolyT();
        std::map<std::uint64_t, C, std::greater<std::uint64_t>> acc;
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Mono m = a.first * b.first;
                C c = CoeffTraits<C>::mul(a.second, b.second);
                auto it = acc.find(m.key());
                if (it == acc.end()) {
                    if (!CoeffTraits<C>::is_zero(c)) acc.emplace(m.key(), c);
                } else {
                    it->second = CoeffTraits<C>::add(it->second, c);
                    if (CoeffTraits<C>::is_zero(it->second)) acc.erase(it);
                }
            }
        MPolyT r;
        r.terms_.reserve(acc.size());
        for (const auto& [k, c] : acc) r.terms_.push_back({Mono::from_key(k), c});
        return r;
    }

    MPolyT operator*(const C& c) const {
        if (CoeffTraits<C>::is_zero(c)) return MPolyT();
        MPolyT r = *this;
        for (auto& t : r.terms_) t.second = CoeffTraits<C>::mul(t.second, c);
        return r;
    }

    MPolyT& operator+=(const MPolyT& o) { return *this = *this + o; }
    MPolyT& operator-=(const MPolyT& o) { return *this = *this - o; }
    MPolyT& operator*=(const MPolyT& o) { return *this = *this * o; }

    bool operator==(const MPolyT& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].first == o.terms_[i].first) ||
                !CoeffTraits<C>::eq(terms_[i].second, o.terms_[i].second))
                return false;
        return true;
    }
    bool operator!=(const MPolyT& o) const { return !(*this == o); }

    MPolyT pow(int n) const {
        if (n < 0) throw InvalidDegree("negative power");
        MPolyT r = constant(CoeffTraits<C>::one());
        for (int i = 0; i < n; ++i) r = r * (*this);
        return r;
    }

    MPolyT derivative(Var v) const {
        MPolyT r;
        for (const auto& t : terms_) {
            int e = t.first.e[v];
            if (e == 0) continue;
            Mono m = t.first;
            m.e[v] = static_cast<std::uint8_t>(e - 1);
            C c = CoeffTraits<C>::mul(t.second, CoeffTraits<C>::from_int(e));
            if (!CoeffTraits<C>::is_zero(c)) r.terms_.push_back({m, c});
        }
        // dropping one exponent does not preserve graded order; re-sort
        r.sort_normalize();
        return r;
    }

    // exact division; throws DivisibilityError when not an exact multiple
    static MPolyT exact_div(const MPolyT& f, const MPolyT& g) {
        if (g.is_zero()) throw DivisibilityError("division by zero polynomial");
        MPolyT q, r = f;
        while (!r.is_zero()) {
            if (!g.lm().divides(r.lm()))
                throw DivisibilityError("leading monomial not divisible");
            Mono m = g.lm().quotient_into(r.lm());
            C c = CoeffTraits<C>::div(r.lc(), g.lc());
            MPolyT t = term(m, c);
            q += t;
            r -= t * g;
        }
        return q;
    }
    static bool try_exact_div(const MPolyT& f, const MPolyT& g, MPolyT& quot) {
        if (g.is_zero()) return false;
        MPolyT q, r = f;
        while (!r.is_zero()) {
            if (!g.lm().divides(r.lm())) return false;
            Mono m = g.lm().quotient_into(r.lm());
            C c = CoeffTraits<C>::div(r.lc(), g.lc());
            MPolyT t = term(m, c);
            q += t;
            r -= t * g;
        }
        quot = q;
        return true;
    }

    // simultaneous substitution of several variables
    MPolyT substitute(const std::map<Var, MPolyT>& images) const {
        MPolyT result;
        // power caches per substituted variable
        std::map<Var, std::vector<MPolyT>> cache;
        for (const auto& [v, img] : images) cache[v] = {constant(CoeffTraits<C>::one())};
        for (const auto& t : terms_) {
            MPolyT piece = constant(t.second);
            Mono rest = t.first;
            for (const auto& [v, img] : images) {
                int e = rest.e[v];
                rest.e[v] = 0;
                if (e == 0) continue;
                auto& powers = cache[v];
                while (static_cast<int>(powers.size()) <= e)
                    powers.push_back(powers.back() * img);
                piece = piece * powers[e];
            }
            piece = piece * term(rest, CoeffTraits<C>::one());
            result += piece;
        }
        return result;
    }

    MPolyT substitute(Var v, const MPolyT& image) const {
        return substitute(std::map<Var, MPolyT>{{v, image}});
    }

    // coefficient of v^e as a polynomial in the remaining variables
    MPolyT coeff_of(Var v, int e) const {
        MPolyT r;
        for (const auto& t : terms_) {
            if (t.first.e[v] != e) continue;
            Mono m = t.first;
            m.e[v] = 0;
            r.terms_.push_back({m, t.second});
        }
        r.sort_normalize();
        return r;
    }

    // dense univariate view in v; requires no other variable present
    std::vector<C> to_dense(Var v) const {
        std::vector<C> d(static_cast<std::size_t>(std::max(0, degree(v)) + 1),
                         CoeffTraits<C>::zero());
        for (const auto& t : terms_) {
            for (int i = 0; i < kNumVars; ++i)
                if (i != v && t.first.e[i] != 0)
                    throw UnsupportedShape("dense view of a multivariate polynomial");
            d[t.first.e[v]] = t.second;
        }
        if (is_zero()) d.assign(1, CoeffTraits<C>::zero());
        return d;
    }
    static MPolyT from_dense(const std::vector<C>& d, Var v) {
        MPolyT r;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (!CoeffTraits<C>::is_zero(d[i]))
                r.terms_.push_back({Mono::of(v, static_cast<int>(i)), d[i]});
        r.sort_normalize();
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            C c = t.second;
            bool neg = CoeffTraits<C>::is_negative_for_print(c);
            if (neg) c = CoeffTraits<C>::abs_for_print(c);
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono;
            for (int v = 0; v < kNumVars; ++v) {
                int e = t.first.e[v];
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(v);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            bool coeff_is_one =
                CoeffTraits<C>::eq(c, CoeffTraits<C>::one());
            if (mono.empty()) {
                out += CoeffTraits<C>::str(c);
            } else if (coeff_is_one) {
                out += mono;
            } else {
                std::string cs = CoeffTraits<C>::str(c);
                bool needs_parens = cs.find(' ') != std::string::npos ||
                                    cs.find('+') != std::string::npos ||
                                    (cs.find('-') != std::string::npos && cs.find('-') != 0);
                if (needs_parens) cs = "(" + cs + ")";
                out += cs + "*" + mono;
            }
        }
        return out;
    }

  private:
    std::vector<Term> terms_;

    MPolyT merged(const MPolyT& o, bool subtract) const {
        MPolyT r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            bool take_left;
            if (i >= terms_.size())
                take_left = false;
            else if (j >= o.terms_.size())
                take_left = true;
            else {
                std::uint64_t ka = terms_[i].first.key(), kb = o.terms_[j].first.key();
                if (ka == kb) {
                    C c = subtract ? CoeffTraits<C>::sub(terms_[i].second, o.terms_[j].second)
                                   : CoeffTraits<C>::add(terms_[i].second, o.terms_[j].second);
                    if (!CoeffTraits<C>::is_zero(c)) r.terms_.push_back({terms_[i].first, c});
                    ++i, ++j;
                    continue;
                }
                take_left = ka > kb;
            }
            if (take_left) {
                r.terms_.push_back(terms_[i]);
                ++i;
            } else {
                const auto& t = o.terms_[j];
                r.terms_.push_back({t.first, subtract ? CoeffTraits<C>::neg(t.second) : t.second});
                ++j;
            }
        }
        return r;
    }

    void sort_normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
            return a.first.key() > b.first.key();
        });
        // merge duplicates (defensive; callers keep keys distinct)
        std::vector<Term> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second = CoeffTraits<C>::add(out.back().second, t.second);
            else
                out.push_back(t);
        }
        terms_.clear();
        for (auto& t : out)
            if (!CoeffTraits<C>::is_zero(t.second)) terms_.push_back(t);
    }
};

using Poly = MPolyT<Q>;

// ---------------------------------------------------------------------------
// Operations specific to the rational field or to the (x, y) plane.
// ---------------------------------------------------------------------------

// k-th transvectant of two polynomials in (x, y):
//   (f, g)^(k) = sum_{h=0..k} (-1)^h C(k,h) d^k f/dx^{k-h} dy^h * d^k g/dx^h dy^{k-h}
template <class C>
MPolyT<C> transvectant(const MPolyT<C>& f, const MPolyT<C>& g, int k) {
    if (k < 0) throw InvalidIndex("transvectant order must be nonnegative");
    // fd[h] = d^k f / dx^{k-h} dy^h, gd[h] = d^k g / dx^h dy^{k-h}
    std::vector<MPolyT<C>> fd(k + 1), gd(k + 1);
    for (int h = 0; h <= k; ++h) {
        MPolyT<C> cf = f;
        for (int i = 0; i < k - h; ++i) cf = cf.derivative(VarX);
        for (int i = 0; i < h; ++i) cf = cf.derivative(VarY);
        fd[h] = cf;
        MPolyT<C> cg = g;
        for (int i = 0; i < h; ++i) cg = cg.derivative(VarX);
        for (int i = 0; i < k - h; ++i) cg = cg.derivative(VarY);
        gd[h] = cg;
    }
    MPolyT<C> acc;
    long binom = 1;
    for (int h = 0; h <= k; ++h) {
        if (h > 0) binom = binom * (k - h + 1) / h;
        long s = (h % 2 == 1) ? -binom : binom;
        acc += (fd[h] * gd[h]) * CoeffTraits<C>::from_int(s);
    }
    return acc;
}

// total-degree homogenization (x,y) -> (X,Y,Z) at the requested degree
Poly homogenize(const Poly& f, int degree);

// inverse chart: (X,Y,Z) -> (x,y) with Z = 1
Poly dehomogenize_xy(const Poly& F);

// affine substitution x -> m00 x + m01 y + t0, y -> m10 x + m11 y + t1
Poly substitute_affine(const Poly& f, const std::array<Q, 4>& m, const std::array<Q, 2>& t);

// content/primitive normalization over Q: f = content * primitive, where
// primitive has coprime integer coefficients and positive leading coefficient
// in graded-lex order; content carries sign.
Q content(const Poly& f);
Poly primitive_part(const Poly& f);
// primitive with positive leading coefficient (canonical associate)
Poly normalized(const Poly& f);

// evaluate at x = px, y = py (other variables must be absent)
Q eval_xy(const Poly& f, const Q& px, const Q& py);

} // namespace cubiclines
