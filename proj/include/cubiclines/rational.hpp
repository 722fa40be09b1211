#pragma once
// ============================================================================
// Exact rational scalars.  Thin helpers over GMP's mpq_class: canonical
// construction, strict string parsing ("-3", "5/7"; no floats), printing.
// ============================================================================

#include <gmpxx.h>
#include <string>

#include "cubiclines/errors.hpp"

namespace cubiclines {

using Q = mpq_class;
using Z = mpz_class;

// num/den with canonicalization; den must be nonzero.
inline Q make_q(long num, long den = 1) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Q q(num, den);
    q.canonicalize();
    return q;
}

// Accepts optional sign, digits, optional "/digits".  Rejects anything else
// (floats, exponents, whitespace inside the token).
Q q_parse(const std::string& text);

std::string q_str(const Q& q);

inline int q_sign(const Q& q) { return sgn(q); }

inline Z q_num(const Q& q) { return q.get_num(); }
inline Z q_den(const Q& q) { return q.get_den(); }

} // namespace cubiclines
