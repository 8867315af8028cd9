#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apolar {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact rational p/q in lowest terms.
inline Rat make_rat(long p, long q = 1) {
    if (q == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline long binomial_l(long n, long k) {
    Int b = binomial(n, k);
    if (!b.fits_slong_p()) throw std::overflow_error("binomial_l: value does not fit a long");
    return b.get_si();
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

/// Dimension of the space of degree-j forms in `nvars` variables.
inline long monomial_space_dim(int nvars, int j) {
    if (j < 0) return 0;
    return binomial_l(j + nvars - 1, nvars - 1);
}

inline long ceil_div(long a, long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: nonpositive divisor");
    return (a + b - 1) / b;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace apolar
