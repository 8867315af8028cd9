#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "apolarity.hpp"
#include "catalecticant.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

namespace apolar {

namespace detail {

// Univariate exact helpers on ascending coefficient vectors.

inline void uv_trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<Rat> uv_derivative(const std::vector<Rat>& p) {
    std::vector<Rat> d;
    for (size_t t = 1; t < p.size(); ++t) d.push_back(p[t] * Rat(static_cast<long>(t)));
    uv_trim(d);
    return d;
}

inline std::vector<Rat> uv_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t t = 0; t < b.size(); ++t) a[shift + t] -= q * b[t];
        uv_trim(a);
    }
    return a;
}

inline std::vector<Rat> uv_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    uv_trim(a);
    uv_trim(b);
    while (!b.empty()) {
        auto r = uv_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool uv_squarefree(const std::vector<Rat>& p) {
    if (p.size() <= 2) return true;
    return uv_gcd(p, uv_derivative(p)).size() <= 1;
}

inline Rat uv_eval(const std::vector<Rat>& p, const Rat& x) {
    Rat acc(0);
    for (size_t t = p.size(); t-- > 0;) acc = acc * x + p[t];
    return acc;
}

/// Divide by (u - root); remainder is zero by assumption.
inline std::vector<Rat> uv_deflate(const std::vector<Rat>& p, const Rat& root) {
    std::vector<Rat> q(p.size() - 1);
    Rat carry(0);
    for (size_t t = p.size(); t-- > 1;) {
        carry = p[t] + carry * root;
        q[t - 1] = carry;
    }
    return q;
}

inline std::vector<Int> positive_divisors(const Int& n_in, const Int& cap) {
    Int n = abs(n_in);
    std::vector<Int> divs;
    if (n == 0 || n > cap) return divs;
    for (Int d(1); d * d <= n; ++d)
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Extracts all rational roots of p (ascending coefficients), deflating as it
/// goes; roots are appended in discovery order. Skips the search entirely when
/// the scaled integer coefficients are too large to enumerate divisors.
inline std::vector<Rat> uv_rational_roots(std::vector<Rat>& p) {
    std::vector<Rat> roots;
    uv_trim(p);
    const Int divisor_cap = Int("10000000000");
    bool progress = true;
    while (progress && p.size() > 1) {
        progress = false;
        Int denom_lcm(1);
        for (const Rat& c : p) {
            Int d = c.get_den();
            denom_lcm = lcm(denom_lcm, d);
        }
        Int a0 = Int(p.front() * Rat(denom_lcm));
        Int al = Int(p.back() * Rat(denom_lcm));
        if (a0 == 0) {  // root u = 0 handled by the caller via deflation
            roots.emplace_back(0);
            p.erase(p.begin());
            progress = true;
            continue;
        }
        auto ps = positive_divisors(a0, divisor_cap);
        auto qs = positive_divisors(al, divisor_cap);
        if (ps.empty() || qs.empty()) break;  // out of enumeration budget
        for (const Int& q : qs) {
            for (const Int& num : ps) {
                for (int sign = 0; sign < 2 && !progress; ++sign) {
                    Rat cand(sign == 0 ? num : Int(-num), q);
                    cand.canonicalize();
                    if (uv_eval(p, cand) == 0) {
                        roots.push_back(cand);
                        p = uv_deflate(p, cand);
                        progress = true;
                    }
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    return roots;
}

}  // namespace detail

inline void require_binary(const Polynomial& f, const char* who) {
    if (f.num_vars() != 2)
        throw std::invalid_argument(std::string(who) + ": binary form required");
    if (f.is_zero()) throw std::invalid_argument(std::string(who) + ": zero form");
}

/// True iff the binary form g (coefficients on the y0-descending basis) has
/// distinct roots in P^1. The root at [1:0] is handled by degree-drop
/// accounting before the univariate gcd.
inline bool binary_form_squarefree(const Polynomial& g) {
    require_binary(g, "binary_form_squarefree");
    std::vector<Rat> c = g.coefficient_vector();  // c[t] multiplies y0^(e-t) y1^t
    size_t e = c.size() - 1;
    size_t mult_inf = 0;
    while (mult_inf <= e && c[mult_inf] == 0) ++mult_inf;
    if (mult_inf >= 2) return false;
    std::vector<Rat> asc;  // q(u) = g(u, 1) with the [1:0] factor removed
    for (size_t s = 0; s + mult_inf <= e; ++s) asc.push_back(c[e - s]);
    detail::uv_trim(asc);
    return detail::uv_squarefree(asc);
}

/// Generators of the principal pair Ann(f) = (g1, g2) for binary f, with
/// deg g1 = e1 <= e2 = deg g2 and e1 + e2 = d + 2. g1 is the canonical kernel
/// element at the first degree with nonzero kernel; g2 is the first canonical
/// kernel element at degree e2 outside the multiples of g1.
struct ApolarPair {
    int e1 = 0, e2 = 0;
    Polynomial g1, g2;
};

inline ApolarPair apolar_pair(const Polynomial& f) {
    require_binary(f, "apolar_pair");
    int d = f.degree();
    ApolarPair out;
    for (int i = 1; i <= d + 1; ++i) {
        GradedIdealSlice s = i <= d ? apolar_slice(f, i) : detail::full_slice(2, i);
        if (s.dimension() > 0) {
            out.e1 = i;
            out.g1 = s.basis[0];
            break;
        }
    }
    out.e2 = d + 2 - out.e1;
    GradedIdealSlice top =
        out.e2 <= d ? apolar_slice(f, out.e2) : detail::full_slice(2, out.e2);
    std::vector<std::vector<Rat>> multiples;
    for (const MultiIndex& gamma : monomial_basis(2, out.e2 - out.e1))
        multiples.push_back((Polynomial::monomial(gamma) * out.g1).coefficient_vector());
    for (const Polynomial& cand : top.basis)
        if (!span_contains(multiples, cand.coefficient_vector())) {
            out.g2 = cand;
            return out;
        }
    throw std::logic_error("apolar_pair: no second generator found");
}

inline long binary_rank(const Polynomial& f) {
    ApolarPair p = apolar_pair(f);
    return binary_form_squarefree(p.g1) ? p.e1 : p.e2;
}

inline long binary_cactus_rank(const Polynomial& f) { return apolar_pair(f).e1; }

inline void require_gradient_order(const Polynomial& f, int k, const char* who) {
    if (k <= 0 || k >= f.degree())
        throw std::invalid_argument(std::string(who) + ": 0 < k < deg(f) required");
}

inline long binary_gradient_rank(const Polynomial& f, int k) {
    require_binary(f, "binary_gradient_rank");
    require_gradient_order(f, k, "binary_gradient_rank");
    return std::min(binary_rank(f), static_cast<long>(f.degree() - k + 1));
}

inline long binary_gradient_cactus(const Polynomial& f, int k) {
    require_binary(f, "binary_gradient_cactus");
    require_gradient_order(f, k, "binary_gradient_cactus");
    return std::min(binary_cactus_rank(f), static_cast<long>(f.degree() - k + 1));
}

/// Linear forms and coefficients witnessing f_j = sum_i lambda_(j,i) ell_i^d
/// for every member of a family, exactly or with a numeric residual.
struct DecompositionCertificate {
    enum class Mode { Exact, Numeric };
    Mode mode = Mode::Exact;
    std::vector<LinearForm> points;
    std::vector<std::vector<Rat>> coefficients;  // [member][point]
    std::vector<ComplexLinearForm> numeric_points;
    std::vector<std::vector<Complex>> numeric_coefficients;
    Real residual = Real(0);

    long length() const {
        return mode == Mode::Exact ? static_cast<long>(points.size())
                                   : static_cast<long>(numeric_points.size());
    }
};

inline std::optional<DecompositionCertificate> make_exact_certificate(
    const std::vector<Polynomial>& family, const std::vector<LinearForm>& pts) {
    DecompositionSolve s = decomposition_coefficients(family, pts);
    if (!s.consistent) return std::nullopt;
    DecompositionCertificate cert;
    cert.mode = DecompositionCertificate::Mode::Exact;
    cert.points = pts;
    cert.coefficients = s.coefficients;
    return cert;
}

inline DecompositionCertificate make_numeric_certificate(
    const std::vector<Polynomial>& family, const std::vector<ComplexLinearForm>& pts) {
    NumericDecomposition s = decomposition_coefficients_numeric(family, pts);
    DecompositionCertificate cert;
    cert.mode = DecompositionCertificate::Mode::Numeric;
    cert.numeric_points = pts;
    cert.numeric_coefficients = s.coefficients;
    cert.residual = s.residual;
    return cert;
}

namespace detail {

/// Enumerates integer coefficient tuples by increasing max-norm, then
/// lexicographically within each shell.
class TupleEnumerator {
   public:
    explicit TupleEnumerator(size_t len) : len_(len), shell_(0), cur_(len, 0), done_first_(false) {}

    std::vector<long> next() {
        if (shell_ == 0) {
            shell_ = 1;
            std::fill(cur_.begin(), cur_.end(), -1);
            done_first_ = false;
            return std::vector<long>(len_, 0);
        }
        while (true) {
            if (done_first_) {
                size_t pos = len_;
                while (pos-- > 0) {
                    if (cur_[pos] < shell_) {
                        ++cur_[pos];
                        std::fill(cur_.begin() + static_cast<long>(pos) + 1, cur_.end(), -shell_);
                        break;
                    }
                    if (pos == 0) {
                        ++shell_;
                        std::fill(cur_.begin(), cur_.end(), -shell_);
                        break;
                    }
                }
            }
            done_first_ = true;
            bool on_shell = false;
            for (long v : cur_)
                if (v == shell_ || v == -shell_) on_shell = true;
            if (on_shell) return cur_;
        }
    }

   private:
    size_t len_;
    long shell_;
    std::vector<long> cur_;
    bool done_first_;
};

inline Polynomial binary_from_coeffs(const std::vector<Rat>& c) {
    return Polynomial::from_coefficient_vector(2, static_cast<int>(c.size()) - 1, c);
}

struct BinaryRoots {
    bool exact = true;
    std::vector<LinearForm> points;             // exact mode
    std::vector<ComplexLinearForm> num_points;  // numeric mode
};

/// Roots of a squarefree binary dual form as points of P(V): a root (a : b)
/// of g(y0, y1) gives the linear form a*x0 + b*x1.
inline BinaryRoots binary_form_roots(const Polynomial& g) {
    std::vector<Rat> c = g.coefficient_vector();
    size_t e = c.size() - 1;
    BinaryRoots out;
    std::vector<Rat> exact_roots;  // finite roots u with (u : 1)
    bool root_at_infinity = c[0] == 0;

    std::vector<Rat> asc;
    for (size_t s = 0; s <= e - (root_at_infinity ? 1 : 0); ++s) asc.push_back(c[e - s]);
    uv_trim(asc);
    exact_roots = uv_rational_roots(asc);

    if (asc.size() <= 1) {
        out.exact = true;
        if (root_at_infinity) out.points.emplace_back(std::vector<Rat>{Rat(1), Rat(0)});
        for (const Rat& u : exact_roots)
            out.points.emplace_back(std::vector<Rat>{u, Rat(1)});
        return out;
    }

    out.exact = false;
    if (root_at_infinity)
        out.num_points.emplace_back(std::vector<Complex>{Complex(Rat(1)), Complex(Rat(0))});
    for (const Rat& u : exact_roots)
        out.num_points.emplace_back(std::vector<Complex>{Complex(u), Complex(Rat(1))});
    std::vector<Complex> cc;
    for (const Rat& q : asc) cc.emplace_back(q);
    for (const Complex& z : polynomial_roots(cc))
        out.num_points.emplace_back(std::vector<Complex>{z, Complex(Rat(1))});
    return out;
}

}  // namespace detail

/// Minimal Waring decomposition of a binary form via the apolar pair: the
/// roots of g1 when it is squarefree, otherwise the roots of the first
/// squarefree combination g1*h + g2 over a deterministic enumeration of
/// small-integer h. Roots are taken exactly over Q when the form splits,
/// and as polished complex approximations otherwise.
inline DecompositionCertificate binary_decompose(const Polynomial& f, long budget = 10000) {
    require_binary(f, "binary_decompose");
    ApolarPair pair = apolar_pair(f);

    Polynomial witness = pair.g1;
    if (!binary_form_squarefree(pair.g1)) {
        detail::TupleEnumerator h_iter(static_cast<size_t>(pair.e2 - pair.e1 + 1));
        bool found = false;
        for (long tries = 0; tries < budget; ++tries) {
            std::vector<long> h = h_iter.next();
            std::vector<Rat> hc(h.begin(), h.end());
            bool h_zero = true;
            for (const Rat& v : hc) h_zero &= v == 0;
            Polynomial cand =
                h_zero ? pair.g2
                       : pair.g2 + detail::binary_from_coeffs(hc) * pair.g1;
            if (cand.is_zero()) continue;
            if (binary_form_squarefree(cand)) {
                witness = cand;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error(
                "binary_decompose: squarefree search budget exhausted");
    }

    detail::BinaryRoots roots = detail::binary_form_roots(witness);
    std::vector<Polynomial> family{f};
    if (roots.exact) {
        auto cert = make_exact_certificate(family, roots.points);
        if (!cert)
            throw std::logic_error("binary_decompose: exact apolar points failed to span");
        return *cert;
    }
    return make_numeric_certificate(family, roots.num_points);
}

/// Full Sylvester summary of a binary form.
struct SylvesterResult {
    int e1 = 0, e2 = 0;
    Polynomial g1, g2;
    bool g1_squarefree = false;
    long rank = 0;
    long cactus_rank = 0;
    std::optional<DecompositionCertificate> certificate;
};

inline SylvesterResult sylvester_analyze(const Polynomial& f, bool with_certificate) {
    require_binary(f, "sylvester_analyze");
    SylvesterResult r;
    ApolarPair pair = apolar_pair(f);
    r.e1 = pair.e1;
    r.e2 = pair.e2;
    r.g1 = pair.g1;
    r.g2 = pair.g2;
    r.g1_squarefree = binary_form_squarefree(pair.g1);
    r.rank = r.g1_squarefree ? pair.e1 : pair.e2;
    r.cactus_rank = pair.e1;
    if (with_certificate) r.certificate = binary_decompose(f);
    return r;
}

}  // namespace apolar
