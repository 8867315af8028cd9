#pragma once

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multi_index.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace apolar {

using Real = mpf_class;

/// Working precision of the numeric mode, in bits. New Real values pick up
/// the current setting; exact-mode code never consults it.
inline void set_numeric_precision_bits(unsigned long bits) {
    if (bits < 24) throw std::invalid_argument("set_numeric_precision_bits: too few bits");
    mpf_set_default_prec(bits);
}

inline unsigned long numeric_precision_bits() { return mpf_get_default_prec(); }

inline Real to_real(const Rat& q) { return Real(q); }

/// Complex number over arbitrary-precision reals; just enough arithmetic for
/// root finding and linear solves.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(0) {}
    explicit Complex(const Rat& q) : re(to_real(q)), im(0) {}
    explicit Complex(long v) : re(v), im(0) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator/(const Complex& o) const {
        Real n = o.re * o.re + o.im * o.im;
        if (n == 0) throw std::domain_error("Complex: division by zero");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    Real abs2() const { return re * re + im * im; }
    Real abs() const { return sqrt(abs2()); }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline std::string format_real(const Real& v, size_t digits = 24) {
    mp_exp_t exp10 = 0;
    std::string mant = v.get_str(exp10, 10, digits);
    if (mant.empty() || mant == "-") return "0";
    bool neg = mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    std::ostringstream os;
    if (neg) os << "-";
    os << "0." << d << "e" << exp10;
    return os.str();
}

struct ComplexLinearForm {
    std::vector<Complex> coefficients;

    explicit ComplexLinearForm(std::vector<Complex> c) : coefficients(std::move(c)) {
        bool nonzero = false;
        for (const Complex& v : coefficients) nonzero |= !v.is_zero();
        if (!nonzero) throw std::invalid_argument("ComplexLinearForm: zero form");
    }

    static ComplexLinearForm from_exact(const LinearForm& ell) {
        std::vector<Complex> c;
        for (const Rat& q : ell.coefficients) c.emplace_back(q);
        return ComplexLinearForm(std::move(c));
    }

    int num_vars() const { return static_cast<int>(coefficients.size()); }
};

/// Multinomial expansion of ell^d over monomial_basis(n+1, d).
inline std::vector<Complex> power_expansion(const ComplexLinearForm& ell, int d) {
    auto basis = monomial_basis(ell.num_vars(), d);
    std::vector<Complex> out;
    out.reserve(basis.size());
    Int dfact = factorial(d);
    for (const MultiIndex& alpha : basis) {
        Complex c(Rat(dfact / alpha.factorial_product()));
        for (int i = 0; i < ell.num_vars(); ++i)
            for (int e = 0; e < alpha[i]; ++e) c = c * ell.coefficients[static_cast<size_t>(i)];
        out.push_back(c);
    }
    return out;
}

/// Gaussian elimination with modulus pivoting; free columns are set to zero.
/// Consistency is not decided here: callers judge the expansion residual.
inline std::vector<std::vector<Complex>> solve_complex(std::vector<std::vector<Complex>> a,
                                                       std::vector<std::vector<Complex>> rhs) {
    size_t m = a.size();
    size_t r = m == 0 ? 0 : a[0].size();
    size_t piv_row = 0;
    std::vector<long> pivot_of_col(r, -1);
    for (size_t c = 0; c < r && piv_row < m; ++c) {
        size_t best = piv_row;
        Real best_n = a[piv_row][c].abs2();
        for (size_t i = piv_row + 1; i < m; ++i) {
            Real n = a[i][c].abs2();
            if (n > best_n) {
                best = i;
                best_n = n;
            }
        }
        if (best_n == 0) continue;
        std::swap(a[best], a[piv_row]);
        for (auto& b : rhs) std::swap(b[best], b[piv_row]);
        for (size_t i = 0; i < m; ++i) {
            if (i == piv_row || a[i][c].is_zero()) continue;
            Complex factor = a[i][c] / a[piv_row][c];
            for (size_t j = c; j < r; ++j) a[i][j] -= factor * a[piv_row][j];
            for (auto& b : rhs) b[i] -= factor * b[piv_row];
        }
        pivot_of_col[c] = static_cast<long>(piv_row);
        ++piv_row;
    }
    std::vector<std::vector<Complex>> out;
    for (const auto& b : rhs) {
        std::vector<Complex> x(r);
        for (size_t c = 0; c < r; ++c)
            if (pivot_of_col[c] >= 0)
                x[c] = b[static_cast<size_t>(pivot_of_col[c])] /
                       a[static_cast<size_t>(pivot_of_col[c])][c];
        out.push_back(std::move(x));
    }
    return out;
}

/// Simultaneous numeric decomposition: coefficients lambda with
/// f_j ~ sum_i lambda_(j,i) ell_i^e and the expansion residual, the largest
/// coefficient mismatch over the whole family.
struct NumericDecomposition {
    std::vector<std::vector<Complex>> coefficients;  // [family member][point]
    Real residual;
};

inline NumericDecomposition decomposition_coefficients_numeric(
    const std::vector<Polynomial>& family, const std::vector<ComplexLinearForm>& points) {
    if (family.empty() || points.empty())
        throw std::invalid_argument("decomposition_coefficients_numeric: empty input");
    int nv = family[0].num_vars();
    int e = family[0].degree();
    for (const Polynomial& f : family)
        if (f.num_vars() != nv || f.degree() != e)
            throw std::invalid_argument("decomposition_coefficients_numeric: shape mismatch");

    std::vector<std::vector<Complex>> expansions;
    for (const auto& p : points) {
        if (p.num_vars() != nv)
            throw std::invalid_argument("decomposition_coefficients_numeric: point size mismatch");
        expansions.push_back(power_expansion(p, e));
    }
    size_t rows = expansions[0].size();
    std::vector<std::vector<Complex>> a(rows, std::vector<Complex>(points.size()));
    for (size_t j = 0; j < points.size(); ++j)
        for (size_t r = 0; r < rows; ++r) a[r][j] = expansions[j][r];

    std::vector<std::vector<Complex>> rhs;
    for (const Polynomial& f : family) {
        auto v = f.coefficient_vector();
        std::vector<Complex> b;
        b.reserve(v.size());
        for (const Rat& q : v) b.emplace_back(q);
        rhs.push_back(std::move(b));
    }

    NumericDecomposition out;
    out.coefficients = solve_complex(a, rhs);
    out.residual = Real(0);
    for (size_t j = 0; j < family.size(); ++j) {
        for (size_t r = 0; r < rows; ++r) {
            Complex acc = rhs[j][r];
            for (size_t i = 0; i < points.size(); ++i)
                acc -= out.coefficients[j][i] * a[r][i];
            Real err = acc.abs();
            if (err > out.residual) out.residual = err;
        }
    }
    return out;
}

/// All roots of a squarefree univariate polynomial with complex coefficients
/// (ascending, nonzero leading term), by Durand-Kerner iteration followed by
/// a Newton polish.
inline std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.size() < 2) throw std::invalid_argument("polynomial_roots: degree must be >= 1");
    size_t deg = coeffs.size() - 1;
    Complex lead = coeffs.back();
    for (auto& c : coeffs) c = c / lead;

    auto eval = [&](const Complex& z) {
        Complex acc = coeffs.back();
        for (size_t t = coeffs.size() - 1; t-- > 0;) acc = acc * z + coeffs[t];
        return acc;
    };
    auto eval_deriv = [&](const Complex& z) {
        Complex acc = coeffs.back() * Complex(static_cast<long>(deg));
        for (size_t t = deg - 1; t >= 1; --t) {
            acc = acc * z + coeffs[t] * Complex(static_cast<long>(t));
            if (t == 1) break;
        }
        return acc;
    };

    Real bound(1);
    for (size_t t = 0; t < deg; ++t) {
        Real a = coeffs[t].abs();
        if (a > bound) bound = a;
    }
    bound += 1;

    std::vector<Complex> z(deg);
    Complex seed(Real("0.4"), Real("0.9"));
    Complex cur = seed;
    for (size_t i = 0; i < deg; ++i) {
        z[i] = cur * Complex(bound);
        cur = cur * seed;
    }

    Real eps(1);
    unsigned long prec = numeric_precision_bits();
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec > 24 ? prec - 16 : 8);

    bool converged = false;
    for (int iter = 0; iter < 1000 && !converged; ++iter) {
        Real worst(0);
        for (size_t i = 0; i < deg; ++i) {
            Complex denom(Real(1), Real(0));
            for (size_t j = 0; j < deg; ++j)
                if (j != i) denom = denom * (z[i] - z[j]);
            Complex delta = eval(z[i]) / denom;
            z[i] -= delta;
            Real d = delta.abs();
            if (d > worst) worst = d;
        }
        converged = worst < eps * bound;
    }
    if (!converged) throw std::runtime_error("polynomial_roots: iteration did not converge");

    for (size_t i = 0; i < deg; ++i)
        for (int it = 0; it < 4; ++it) {
            Complex d = eval_deriv(z[i]);
            if (d.is_zero()) break;
            z[i] -= eval(z[i]) / d;
        }
    return z;
}

}  // namespace apolar
