#pragma once

#include <gmpxx.h>

namespace gdr {

// Exact scalar types. All arithmetic in this project is rational; there is
// no floating point anywhere, so every equality test is exact.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

} // namespace gdr
