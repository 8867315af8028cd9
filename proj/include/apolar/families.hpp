#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "apolarity.hpp"
#include "catalecticant.hpp"
#include "sylvester.hpp"

namespace apolar {

namespace detail {
inline std::vector<int> active_exponents(const MultiIndex& alpha, const char* who) {
    std::vector<int> act;
    for (int e : alpha.exponents) {
        if (e < 0) throw std::invalid_argument(std::string(who) + ": negative exponent");
        if (e > 0) act.push_back(e);
    }
    return act;
}
}  // namespace detail

/// Waring rank of x^alpha: the exponent product formula with the smallest
/// exponent in the denominator. Variables with exponent zero are dropped.
inline long monomial_rank(const MultiIndex& alpha) {
    auto act = detail::active_exponents(alpha, "monomial_rank");
    if (act.size() <= 1) return 1;
    long prod = 1, mn = act[0];
    for (int e : act) {
        prod *= e + 1;
        mn = std::min<long>(mn, e);
    }
    return prod / (mn + 1);
}

/// Cactus rank of x^alpha: same product with the largest exponent below.
inline long monomial_cactus_rank(const MultiIndex& alpha) {
    auto act = detail::active_exponents(alpha, "monomial_cactus_rank");
    if (act.size() <= 1) return 1;
    long prod = 1, mx = act[0];
    for (int e : act) {
        prod *= e + 1;
        mx = std::max<long>(mx, e);
    }
    return prod / (mx + 1);
}

/// Number of degree-i divisors of x^alpha; this is the Hilbert function of
/// the apolar algebra of the monomial.
inline long monomial_hf(const MultiIndex& alpha, int i) {
    long count = 0;
    for (const MultiIndex& beta : monomial_basis(alpha.size(), i))
        if (beta.divides(alpha)) ++count;
    return count;
}

struct MonomialGradientRank {
    bool covered = false;
    long value = 0;  // meaningful when covered
    long lower = 0, upper = 0;
    std::string provenance;
};

/// k-th gradient rank of x^alpha. Exact when k is at most the smallest
/// exponent (it equals the Waring rank) or at least d minus it (the k-th
/// catalecticant is onto, so the rank is the ambient dimension); the middle
/// range is reported as bounds only.
inline MonomialGradientRank monomial_gradient_rank(const MultiIndex& alpha, int k) {
    int d = alpha.degree();
    if (k <= 0 || k >= d)
        throw std::invalid_argument("monomial_gradient_rank: 0 < k < |alpha| required");
    auto act = detail::active_exponents(alpha, "monomial_gradient_rank");
    MonomialGradientRank out;
    if (act.size() <= 1) {
        out.covered = true;
        out.value = out.lower = out.upper = 1;
        out.provenance = "gradient-monomial-theorem";
        return out;
    }
    long mn = act[0];
    for (int e : act) mn = std::min<long>(mn, e);
    int n_act = static_cast<int>(act.size()) - 1;
    if (k <= mn) {
        out.covered = true;
        out.value = out.lower = out.upper = monomial_rank(alpha);
        out.provenance = "gradient-monomial-theorem";
        return out;
    }
    if (k >= d - mn) {
        out.covered = true;
        out.value = out.lower = out.upper = binomial_l(d - k + n_act, n_act);
        out.provenance = "surjective-catalecticant";
        return out;
    }
    out.covered = false;
    MultiIndex packed{std::vector<int>(act.begin(), act.end())};
    for (int i = 0; i <= d - k; ++i) out.lower = std::max(out.lower, monomial_hf(packed, i));
    out.upper = std::min(monomial_rank(alpha), binomial_l(d - k + n_act, n_act));
    out.provenance = "uncovered-range";
    return out;
}

/// First gradient cactus rank of a monomial equals its cactus rank.
inline long monomial_gradient_cactus_rank(const MultiIndex& alpha) {
    return monomial_cactus_rank(alpha);
}

/// Generators y_i^(alpha_i + 1) of Ann(x^alpha); unused variables contribute
/// their degree-one dual.
inline std::vector<Polynomial> monomial_apolar_generators(const MultiIndex& alpha) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < alpha.size(); ++i) {
        MultiIndex g(std::vector<int>(static_cast<size_t>(alpha.size()), 0));
        g[i] = alpha[i] >= 1 ? alpha[i] + 1 : 1;
        gens.push_back(Polynomial::monomial(g));
    }
    return gens;
}

struct ElementarySymmetricRank {
    bool exact = false;
    long value = 0;  // meaningful when exact
    long lower = 0, upper = 0;
};

/// Waring rank of the degree-d elementary symmetric polynomial in `nvars`
/// variables: a binomial sum for odd d, a two-sided bound for even d.
inline ElementarySymmetricRank elementary_symmetric_rank(int nvars, int d) {
    if (d < 1 || d > nvars)
        throw std::invalid_argument("elementary_symmetric_rank: need 1 <= d <= nvars");
    ElementarySymmetricRank out;
    if (d % 2 == 1) {
        long v = 0;
        for (int i = 0; i <= (d - 1) / 2; ++i) v += binomial_l(nvars, i);
        out.exact = true;
        out.value = out.lower = out.upper = v;
        return out;
    }
    long hi = 0;
    for (int i = 0; i <= d / 2; ++i) hi += binomial_l(nvars, i);
    out.exact = false;
    out.upper = hi;
    out.lower = hi - binomial_l(nvars - 1, d / 2) - 1;
    return out;
}

/// First gradient rank of the elementary symmetric polynomial: equal to the
/// Waring rank for odd d, bounded below for even d.
inline ElementarySymmetricRank elementary_symmetric_gradient_rank(int nvars, int d) {
    ElementarySymmetricRank base = elementary_symmetric_rank(nvars, d);
    if (base.exact) return base;
    ElementarySymmetricRank out;
    out.exact = false;
    out.lower = base.lower;
    out.upper = base.upper;
    return out;
}

/// Smallest degree whose ideal slice generates an Artinian ideal, i.e. has
/// empty projective zero locus. Fullness of the grown span is checked up to
/// (n+1)(delta-1)+1: a base-point-free slice contains a length-(n+1) complete
/// intersection of degree-delta forms, whose Koszul regularity caps the
/// degree where the generated ideal must become the whole ring.
namespace detail {
/// Growth check when the slice is spanned by monomials: multiplication by
/// variables is exponent-set bookkeeping, no elimination needed.
inline bool monomial_span_reaches_full(const std::vector<Polynomial>& basis, int nvars,
                                       int delta, long cap) {
    std::set<MultiIndex, GradedLexLess> current;
    for (const Polynomial& g : basis) current.insert(g.terms().begin()->first);
    for (long j = delta;; ++j) {
        if (static_cast<long>(current.size()) == monomial_space_dim(nvars, static_cast<int>(j)))
            return true;
        if (j == cap) return false;
        std::set<MultiIndex, GradedLexLess> next;
        for (const MultiIndex& a : current)
            for (int v = 0; v < nvars; ++v) {
                MultiIndex b = a;
                b[v] += 1;
                next.insert(b);
            }
        current = std::move(next);
    }
}

inline bool span_reaches_full(const std::vector<Polynomial>& basis, int nvars, int delta,
                              long cap) {
    std::vector<Polynomial> current = basis;
    for (long j = delta;; ++j) {
        std::vector<std::vector<Rat>> rows;
        for (const Polynomial& g : current) rows.push_back(g.coefficient_vector());
        auto canon = canonical_span(rows);
        if (static_cast<long>(canon.size()) == monomial_space_dim(nvars, static_cast<int>(j)))
            return true;
        if (j == cap) return false;
        std::vector<Polynomial> next;
        for (const auto& row : canon) {
            Polynomial g = Polynomial::from_coefficient_vector(nvars, static_cast<int>(j), row);
            for (int v = 0; v < nvars; ++v) next.push_back(Polynomial::variable(nvars, v) * g);
        }
        current = std::move(next);
    }
}
}  // namespace detail

inline int base_point_free_degree(const std::vector<GradedIdealSlice>& slices, int nvars) {
    for (size_t delta = 1; delta < slices.size(); ++delta) {
        const GradedIdealSlice& s = slices[delta];
        if (static_cast<int>(delta) != s.degree)
            throw std::invalid_argument("base_point_free_degree: slices must be indexed by degree");
        if (s.basis.empty()) continue;
        long cap = static_cast<long>(nvars) * (static_cast<long>(delta) - 1) + 1;
        if (cap < static_cast<long>(delta)) cap = static_cast<long>(delta);
        bool monomial_span = true;
        for (const Polynomial& g : s.basis) monomial_span &= g.term_count() == 1;
        bool full = monomial_span
                        ? detail::monomial_span_reaches_full(s.basis, nvars,
                                                             static_cast<int>(delta), cap)
                        : detail::span_reaches_full(s.basis, nvars, static_cast<int>(delta), cap);
        if (full) return static_cast<int>(delta);
    }
    throw std::domain_error("base_point_free_degree: ideal is not Artinian within the socle bound");
}

/// Ranestad-Schreyer lower bound ceil(dim A / delta) for the cactus rank of f
/// (k = 0) or the gradient cactus rank of its k-th derivatives (k >= 1).
inline long cactus_lower_bound(const Polynomial& f, int k) {
    if (f.is_zero()) throw std::invalid_argument("cactus_lower_bound: zero form");
    if (k < 0 || k >= f.degree())
        throw std::invalid_argument("cactus_lower_bound: order out of range");
    int top = f.degree() - k;  // socle degree of the quotient algebra
    std::vector<GradedIdealSlice> slices;
    long dim_a = 0;
    for (int i = 0; i <= top + 1; ++i) {
        GradedIdealSlice s =
            k == 0 ? (i <= f.degree() ? apolar_slice(f, i) : detail::full_slice(f.num_vars(), i))
                   : gradient_apolar_slice(f, k, i);
        if (i <= top) dim_a += monomial_space_dim(f.num_vars(), i) - s.dimension();
        slices.push_back(std::move(s));
    }
    int delta = base_point_free_degree(slices, f.num_vars());
    return ceil_div(dim_a, delta);
}

// ---------------------------------------------------------------------------
// Rank report assembly
// ---------------------------------------------------------------------------

enum class FormFamily { Binary, Monomial, ElementarySymmetric, Generic };

inline const char* family_name(FormFamily f) {
    switch (f) {
        case FormFamily::Binary: return "binary";
        case FormFamily::Monomial: return "monomial";
        case FormFamily::ElementarySymmetric: return "elementary-symmetric";
        default: return "generic";
    }
}

/// Syntactic family detection; no change of coordinates is attempted.
inline FormFamily detect_family(const Polynomial& f) {
    if (f.num_vars() == 2) return FormFamily::Binary;
    if (f.term_count() == 1) return FormFamily::Monomial;
    bool elementary = f.degree() >= 1 && f.degree() <= f.num_vars() &&
                      f.term_count() == static_cast<size_t>(
                                            binomial_l(f.num_vars(), f.degree()));
    if (elementary)
        for (const auto& [a, c] : f.terms()) {
            if (c != 1) elementary = false;
            for (int e : a.exponents)
                if (e > 1) elementary = false;
        }
    if (elementary) return FormFamily::ElementarySymmetric;
    return FormFamily::Generic;
}

struct BoundEntry {
    std::string provenance;
    long value = 0;
};

/// One quantity of the inequality chain with everything known about it.
struct RankValue {
    std::string label;
    std::optional<long> exact;
    std::string exact_provenance;
    std::vector<BoundEntry> lower_bounds;
    std::vector<BoundEntry> upper_bounds;
    bool conflict = false;

    void add_lower(const std::string& prov, long v) {
        if (v > lower()) lower_bounds.push_back({prov, v});
    }
    void add_upper(const std::string& prov, long v) {
        auto hi = upper();
        if (!hi || v < *hi) upper_bounds.push_back({prov, v});
    }
    void set_exact(const std::string& prov, long v) {
        if (exact && *exact != v) {
            conflict = true;
            return;
        }
        if (!exact) {
            exact = v;
            exact_provenance = prov;
        }
    }

    long lower() const {
        long lo = exact ? *exact : 0;
        for (const auto& b : lower_bounds) lo = std::max(lo, b.value);
        return lo;
    }
    std::optional<long> upper() const {
        std::optional<long> hi = exact;
        for (const auto& b : upper_bounds)
            if (!hi || b.value < *hi) hi = b.value;
        return hi;
    }
    bool consistent() const {
        if (conflict) return false;
        auto hi = upper();
        if (hi && lower() > *hi) return false;
        if (exact && (*exact < lower() || (hi && *exact > *hi))) return false;
        return true;
    }
};

struct ExtraUpperBound {
    enum class Target { Rank, Cactus, Gradient, GradientCactus };
    Target target;
    long value;
    std::string provenance;
};

/// Assembled bounds and exact values for the chains
/// R_d >= R_(k,d-k) >= gradR_k and its cactus counterpart.
struct RankReport {
    FormFamily family = FormFamily::Generic;
    int k = 1;
    HFTable hf;
    std::array<RankValue, 3> rank_chain;    // R_d, R_(k,d-k), gradR_k
    std::array<RankValue, 3> cactus_chain;  // cR_d, cR_(k,d-k), gradcR_k
    std::vector<std::string> notes;
    bool chain_consistent = false;
};

namespace detail {
inline void propagate_chain(std::array<RankValue, 3>& chain, bool tie_last_two) {
    for (int pass = 0; pass < 4; ++pass) {
        for (int i = 0; i < 2; ++i) {
            chain[static_cast<size_t>(i)].add_lower("chain", chain[static_cast<size_t>(i) + 1].lower());
            auto hi = chain[static_cast<size_t>(i)].upper();
            if (hi) chain[static_cast<size_t>(i) + 1].add_upper("chain", *hi);
        }
        if (tie_last_two) {
            if (chain[2].exact) chain[1].set_exact("gradient-equals-partially-symmetric", *chain[2].exact);
            if (chain[1].exact) chain[2].set_exact("gradient-equals-partially-symmetric", *chain[1].exact);
            chain[1].add_lower("gradient-equals-partially-symmetric", chain[2].lower());
            auto hi = chain[2].upper();
            if (hi) chain[1].add_upper("gradient-equals-partially-symmetric", *hi);
        }
        for (auto& v : chain) {
            auto hi = v.upper();
            if (!v.exact && hi && v.lower() == *hi) v.set_exact("bound-squeeze", *hi);
        }
    }
}
}  // namespace detail

inline RankReport rank_report(const Polynomial& f, int k,
                              const std::vector<ExtraUpperBound>& extras = {}) {
    if (f.is_zero()) throw std::invalid_argument("rank_report: zero form");
    if (k <= 0 || k >= f.degree())
        throw std::invalid_argument("rank_report: 0 < k < deg(f) required");
    int d = f.degree();
    int n = f.num_vars() - 1;

    RankReport rep;
    rep.family = detect_family(f);
    rep.k = k;
    rep.hf = apolar_hf(f);

    std::string mid = "R_(" + std::to_string(k) + "," + std::to_string(d - k) + ")";
    rep.rank_chain[0].label = "R_d";
    rep.rank_chain[1].label = mid;
    rep.rank_chain[2].label = "gradR_" + std::to_string(k);
    rep.cactus_chain[0].label = "cR_d";
    rep.cactus_chain[1].label = "c" + mid;
    rep.cactus_chain[2].label = "gradcR_" + std::to_string(k);

    // bounds available for every form
    long cat_lb = 0;
    for (long v : rep.hf.values) cat_lb = std::max(cat_lb, v);
    rep.cactus_chain[0].add_lower("catalecticant", cat_lb);
    rep.rank_chain[0].add_lower("catalecticant", cat_lb);

    long grad_hf_lb = 0;
    for (int i = 0; i <= d - k; ++i)
        grad_hf_lb = std::max(grad_hf_lb, rep.hf.values[static_cast<size_t>(i)]);
    rep.cactus_chain[2].add_lower("catalecticant-gradient", grad_hf_lb);
    rep.rank_chain[2].add_lower("catalecticant-gradient", grad_hf_lb);

    if (n + 1 <= 5) {
        long kos = 0;
        for (int i = 0; i <= d - 1; ++i)
            for (int p = 1; p <= n; ++p) {
                long work = monomial_space_dim(n + 1, d - i - 1) * binomial_l(n + 1, p) *
                            monomial_space_dim(n + 1, i) * binomial_l(n + 1, p - 1);
                if (work > 2000000) continue;
                kos = std::max(kos, koszul_lower_bound(f, i, p));
            }
        if (kos > 0) {
            rep.rank_chain[0].add_lower("koszul-flattening", kos);
            rep.cactus_chain[0].add_lower("koszul-flattening", kos);
        }
    }

    rep.cactus_chain[0].add_lower("ranestad-schreyer", cactus_lower_bound(f, 0));
    rep.cactus_chain[2].add_lower("ranestad-schreyer-gradient", cactus_lower_bound(f, k));

    rep.rank_chain[0].add_upper("ambient-space", monomial_space_dim(n + 1, d));
    rep.rank_chain[2].add_upper("ambient-space", monomial_space_dim(n + 1, d - k));

    if (auto surj = surjective_cat_gradient_rank(f, k))
        rep.rank_chain[2].set_exact("surjective-catalecticant", *surj);

    if (rep.hf.values[1] < n + 1)
        rep.notes.push_back(
            "first catalecticant is rank-deficient: the form can be written in fewer "
            "variables after a linear change of coordinates (not performed)");

    switch (rep.family) {
        case FormFamily::Binary: {
            SylvesterResult s = sylvester_analyze(f, false);
            rep.rank_chain[0].set_exact("sylvester", s.rank);
            rep.cactus_chain[0].set_exact("sylvester-cactus", s.cactus_rank);
            rep.rank_chain[2].set_exact("binary-gradient-formula",
                                        std::min<long>(s.rank, d - k + 1));
            rep.cactus_chain[2].set_exact("binary-gradient-formula",
                                          std::min<long>(s.cactus_rank, d - k + 1));
            // Comon's question has an affirmative answer for binary forms, for
            // ranks and for cactus ranks alike.
            rep.rank_chain[1].set_exact("binary-partially-symmetric", s.rank);
            rep.cactus_chain[1].set_exact("binary-partially-symmetric", s.cactus_rank);
            break;
        }
        case FormFamily::Monomial: {
            const MultiIndex& alpha = f.terms().begin()->first;
            rep.rank_chain[0].set_exact("monomial-rank-formula", monomial_rank(alpha));
            rep.cactus_chain[0].set_exact("monomial-cactus-formula", monomial_cactus_rank(alpha));
            MonomialGradientRank g = monomial_gradient_rank(alpha, k);
            if (g.covered) {
                rep.rank_chain[2].set_exact(g.provenance, g.value);
                if (g.provenance == "gradient-monomial-theorem")
                    rep.rank_chain[1].set_exact(g.provenance, g.value);
            } else {
                rep.rank_chain[2].add_lower(g.provenance, g.lower);
                rep.rank_chain[2].add_upper(g.provenance, g.upper);
            }
            if (k == 1) {
                long gc = monomial_gradient_cactus_rank(alpha);
                rep.cactus_chain[2].set_exact("cactus-gradient-monomial-theorem", gc);
                rep.cactus_chain[1].set_exact("cactus-gradient-monomial-theorem", gc);
            }
            break;
        }
        case FormFamily::ElementarySymmetric: {
            ElementarySymmetricRank r = elementary_symmetric_rank(n + 1, d);
            if (r.exact)
                rep.rank_chain[0].set_exact("elementary-symmetric-odd-formula", r.value);
            else {
                rep.rank_chain[0].add_lower("elementary-symmetric-even-bound", r.lower);
                rep.rank_chain[0].add_upper("elementary-symmetric-even-bound", r.upper);
            }
            if (k == 1) {
                ElementarySymmetricRank g = elementary_symmetric_gradient_rank(n + 1, d);
                if (g.exact)
                    rep.rank_chain[2].set_exact("gradient-elementary-symmetric", g.value);
                else
                    rep.rank_chain[2].add_lower("gradient-elementary-symmetric", g.lower);
            }
            break;
        }
        case FormFamily::Generic:
            break;
    }

    for (const ExtraUpperBound& e : extras) {
        switch (e.target) {
            case ExtraUpperBound::Target::Rank: rep.rank_chain[0].add_upper(e.provenance, e.value); break;
            case ExtraUpperBound::Target::Cactus: rep.cactus_chain[0].add_upper(e.provenance, e.value); break;
            case ExtraUpperBound::Target::Gradient: rep.rank_chain[2].add_upper(e.provenance, e.value); break;
            case ExtraUpperBound::Target::GradientCactus:
                rep.cactus_chain[2].add_upper(e.provenance, e.value);
                break;
        }
    }

    for (int pass = 0; pass < 4; ++pass) {
        detail::propagate_chain(rep.rank_chain, k == 1);
        detail::propagate_chain(rep.cactus_chain, false);
        // cactus rank never exceeds rank over the same decomposition format
        for (size_t i = 0; i < 3; ++i) {
            auto hi = rep.rank_chain[i].upper();
            if (hi) rep.cactus_chain[i].add_upper("rank-dominates-cactus", *hi);
            rep.rank_chain[i].add_lower("rank-dominates-cactus", rep.cactus_chain[i].lower());
        }
    }

    rep.chain_consistent = true;
    for (size_t i = 0; i < 3; ++i)
        rep.chain_consistent &=
            rep.rank_chain[i].consistent() && rep.cactus_chain[i].consistent();
    for (size_t i = 0; i + 1 < 3; ++i) {
        if (rep.rank_chain[i].exact && rep.rank_chain[i + 1].exact)
            rep.chain_consistent &= *rep.rank_chain[i].exact >= *rep.rank_chain[i + 1].exact;
        if (rep.cactus_chain[i].exact && rep.cactus_chain[i + 1].exact)
            rep.chain_consistent &= *rep.cactus_chain[i].exact >= *rep.cactus_chain[i + 1].exact;
    }
    return rep;
}

}  // namespace apolar
