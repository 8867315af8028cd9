#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multi_index.hpp"
#include "rational.hpp"

namespace apolar {

/// Sparse homogeneous polynomial with exact rational coefficients.
///
/// Every stored term has total degree equal to degree(); zero coefficients are
/// never stored, so the zero polynomial has an empty term map (its nominal
/// degree is kept for bookkeeping but ignored by equality).
class Polynomial {
   public:
    using TermMap = std::map<MultiIndex, Rat, GradedLexLess>;

    Polynomial() : num_vars_(1), degree_(0) {}
    Polynomial(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
        if (num_vars < 1) throw std::invalid_argument("Polynomial: need at least one variable");
        if (degree < 0) throw std::invalid_argument("Polynomial: negative degree");
    }

    static Polynomial monomial(const MultiIndex& alpha, const Rat& c = Rat(1)) {
        Polynomial p(alpha.size(), alpha.degree());
        p.add_term(alpha, c);
        return p;
    }

    static Polynomial variable(int num_vars, int i) {
        MultiIndex a(std::vector<int>(static_cast<size_t>(num_vars), 0));
        a[i] = 1;
        return monomial(a);
    }

    static Polynomial constant(int num_vars, const Rat& c) {
        Polynomial p(num_vars, 0);
        p.add_term(MultiIndex(std::vector<int>(static_cast<size_t>(num_vars), 0)), c);
        return p;
    }

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rat coefficient(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const MultiIndex& alpha, const Rat& c) {
        if (alpha.size() != num_vars_)
            throw std::invalid_argument("Polynomial::add_term: variable count mismatch");
        if (alpha.degree() != degree_)
            throw std::invalid_argument("Polynomial::add_term: term degree breaks homogeneity");
        if (c == 0) return;
        Rat& slot = terms_[alpha];
        slot += c;
        if (slot == 0) terms_.erase(alpha);
    }

    bool operator==(const Polynomial& o) const {
        return num_vars_ == o.num_vars_ && terms_ == o.terms_ &&
               (is_zero() || degree_ == o.degree_);
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const {
        check_compatible(o, "+");
        Polynomial r = is_zero() && !o.is_zero() ? Polynomial(num_vars_, o.degree_) : *this;
        for (const auto& [a, c] : o.terms_) r.add_term(a, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        check_compatible(o, "-");
        Polynomial r = is_zero() && !o.is_zero() ? Polynomial(num_vars_, o.degree_) : *this;
        for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
        return r;
    }

    Polynomial operator*(const Rat& s) const {
        Polynomial r(num_vars_, degree_);
        if (s == 0) return r;
        for (const auto& [a, c] : terms_) r.add_term(a, c * s);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        if (num_vars_ != o.num_vars_)
            throw std::invalid_argument("Polynomial::*: variable count mismatch");
        Polynomial r(num_vars_, degree_ + o.degree_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) r.add_term(a + b, ca * cb);
        return r;
    }

    /// Coefficients over monomial_basis(num_vars, degree), in the fixed order.
    std::vector<Rat> coefficient_vector() const {
        auto basis = monomial_basis(num_vars_, degree_);
        std::vector<Rat> v(basis.size(), Rat(0));
        for (const auto& [a, c] : terms_) v[static_cast<size_t>(monomial_position(basis, a))] = c;
        return v;
    }

    static Polynomial from_coefficient_vector(int num_vars, int degree, const std::vector<Rat>& v) {
        auto basis = monomial_basis(num_vars, degree);
        if (v.size() != basis.size())
            throw std::invalid_argument("from_coefficient_vector: length mismatch");
        Polynomial p(num_vars, degree);
        for (size_t i = 0; i < v.size(); ++i) p.add_term(basis[i], v[i]);
        return p;
    }

    Rat evaluate(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != num_vars_)
            throw std::invalid_argument("Polynomial::evaluate: point size mismatch");
        Rat total(0);
        for (const auto& [a, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < num_vars_; ++i)
                for (int e = 0; e < a[i]; ++e) t *= point[static_cast<size_t>(i)];
            total += t;
        }
        return total;
    }

   private:
    void check_compatible(const Polynomial& o, const char* op) const {
        if (num_vars_ != o.num_vars_)
            throw std::invalid_argument(std::string("Polynomial::") + op +
                                        ": variable count mismatch");
        if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
            throw std::invalid_argument(std::string("Polynomial::") + op + ": degree mismatch");
    }

    int num_vars_;
    int degree_;
    TermMap terms_;
};

/// Nonzero linear form sum c_i x_i, stored projectively normalized: the first
/// nonzero coefficient is scaled to 1.
struct LinearForm {
    std::vector<Rat> coefficients;

    explicit LinearForm(std::vector<Rat> coeffs) : coefficients(std::move(coeffs)) {
        size_t lead = coefficients.size();
        for (size_t i = 0; i < coefficients.size(); ++i)
            if (coefficients[i] != 0) {
                lead = i;
                break;
            }
        if (lead == coefficients.size())
            throw std::invalid_argument("LinearForm: all coefficients are zero");
        Rat scale = coefficients[lead];
        for (auto& c : coefficients) c /= scale;
    }

    int num_vars() const { return static_cast<int>(coefficients.size()); }

    bool operator==(const LinearForm& o) const { return coefficients == o.coefficients; }

    Polynomial to_polynomial() const {
        Polynomial p(num_vars(), 1);
        for (int i = 0; i < num_vars(); ++i) {
            MultiIndex a(std::vector<int>(coefficients.size(), 0));
            a[i] = 1;
            p.add_term(a, coefficients[static_cast<size_t>(i)]);
        }
        return p;
    }
};

/// Apolar action of a dual-variable polynomial on f by differentiation:
/// y^beta acts on x^alpha as (alpha!/(alpha-beta)!) x^(alpha-beta) when
/// beta <= alpha componentwise, and as zero otherwise. An operator of degree
/// exceeding deg(f) annihilates everything and yields the zero polynomial.
inline Polynomial apolar_apply(const Polynomial& op, const Polynomial& f) {
    if (op.num_vars() != f.num_vars())
        throw std::invalid_argument("apolar_apply: variable count mismatch");
    if (op.degree() > f.degree()) return Polynomial(f.num_vars(), 0);
    Polynomial r(f.num_vars(), f.degree() - op.degree());
    for (const auto& [beta, cb] : op.terms()) {
        for (const auto& [alpha, ca] : f.terms()) {
            if (!beta.divides(alpha)) continue;
            MultiIndex diff = alpha - beta;
            Rat scale(alpha.factorial_product() / diff.factorial_product());
            r.add_term(diff, cb * ca * scale);
        }
    }
    return r;
}

inline Polynomial partial_derivative(const Polynomial& f, int var) {
    MultiIndex a(std::vector<int>(static_cast<size_t>(f.num_vars()), 0));
    a[var] = 1;
    return apolar_apply(Polynomial::monomial(a), f);
}

/// All order-k partial derivatives of f, indexed by monomial_basis(n+1, k),
/// zero entries included.
inline std::vector<Polynomial> gradient_set(const Polynomial& f, int k) {
    if (k <= 0 || k >= f.degree())
        throw std::invalid_argument("gradient_set: order must satisfy 0 < k < deg(f)");
    std::vector<Polynomial> out;
    for (const MultiIndex& alpha : monomial_basis(f.num_vars(), k))
        out.push_back(apolar_apply(Polynomial::monomial(alpha), f));
    return out;
}

/// Exact multinomial expansion of (sum c_i x_i)^d.
inline Polynomial power_of_linear_form(const LinearForm& ell, int d) {
    if (d < 1) throw std::invalid_argument("power_of_linear_form: degree must be positive");
    int n = ell.num_vars();
    Polynomial p(n, d);
    Int dfact = factorial(d);
    for (const MultiIndex& alpha : monomial_basis(n, d)) {
        Rat c(dfact / alpha.factorial_product());
        for (int i = 0; i < n; ++i) {
            const Rat& ci = ell.coefficients[static_cast<size_t>(i)];
            for (int e = 0; e < alpha[i]; ++e) c *= ci;
            if (c == 0) break;
        }
        p.add_term(alpha, c);
    }
    return p;
}

/// Sum of all square-free degree-d monomials in `nvars` variables.
inline Polynomial elementary_symmetric(int nvars, int d) {
    if (d < 1 || d > nvars)
        throw std::invalid_argument("elementary_symmetric: need 1 <= d <= nvars");
    Polynomial p(nvars, d);
    std::vector<int> subset(static_cast<size_t>(d));
    // iterate over size-d subsets in lexicographic order
    for (int i = 0; i < d; ++i) subset[static_cast<size_t>(i)] = i;
    while (true) {
        MultiIndex a(std::vector<int>(static_cast<size_t>(nvars), 0));
        for (int i : subset) a[i] = 1;
        p.add_term(a, Rat(1));
        int pos = d - 1;
        while (pos >= 0 && subset[static_cast<size_t>(pos)] == nvars - d + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < d; ++i)
            subset[static_cast<size_t>(i)] = subset[static_cast<size_t>(i - 1)] + 1;
    }
    return p;
}

/// The (1, d-1) polarization of f: pairs (i, (1/d) * df/dx_i), zero components
/// omitted. Euler's identity gives back f as sum x_i * component_i.
inline std::vector<std::pair<int, Polynomial>> polarization_tensor(const Polynomial& f) {
    if (f.degree() < 2)
        throw std::invalid_argument("polarization_tensor: degree must be at least 2");
    std::vector<std::pair<int, Polynomial>> out;
    Rat inv_d = make_rat(1, f.degree());
    for (int i = 0; i < f.num_vars(); ++i) {
        Polynomial comp = partial_derivative(f, i) * inv_d;
        if (!comp.is_zero()) out.emplace_back(i, std::move(comp));
    }
    return out;
}

/// Renders with the given variable letter, e.g. "3*x0^2*x1 - 1/2*x2^3".
inline std::string to_string(const Polynomial& f, char var = 'x') {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : f.terms()) {
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_vars = a.degree() > 0;
        if (abs_c != 1 || !has_vars) {
            os << abs_c.get_str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << var << i;
            if (a[i] > 1) os << "^" << a[i];
        }
    }
    return os.str();
}

}  // namespace apolar
