#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <apolar/catalecticant.hpp>
#include <apolar/parse.hpp>

using namespace apolar;

namespace {

Polynomial random_form(std::mt19937& rng, int nvars, int degree, int spread = 4) {
    std::uniform_int_distribution<int> coeff(-spread, spread);
    Polynomial f(nvars, degree);
    for (const MultiIndex& a : monomial_basis(nvars, degree)) f.add_term(a, Rat(coeff(rng)));
    return f;
}

/// Independent construction of the Koszul flattening as an explicit product
/// of the two displayed maps: cat_i(f) tensored with the identity of
/// Lambda^(p-1) V, then the Koszul differential.
RationalMatrix koszul_by_composition(const Polynomial& f, int i, int p) {
    int nv = f.num_vars();
    CatalecticantMatrix cat = catalecticant(f, i);
    auto col_subsets = detail::sorted_subsets(nv, p - 1);
    auto row_subsets = detail::sorted_subsets(nv, p);
    auto mid_basis = monomial_basis(nv, f.degree() - i);
    auto out_basis = monomial_basis(nv, f.degree() - i - 1);

    long s = static_cast<long>(col_subsets.size());
    long m1_rows = static_cast<long>(mid_basis.size()) * s;
    long m1_cols = static_cast<long>(cat.col_basis.size()) * s;
    RationalMatrix m1(m1_rows, m1_cols);
    for (size_t g = 0; g < mid_basis.size(); ++g)
        for (size_t b = 0; b < cat.col_basis.size(); ++b)
            for (long sub = 0; sub < s; ++sub)
                m1.at(static_cast<long>(g) * s + sub, static_cast<long>(b) * s + sub) =
                    cat.matrix.at(static_cast<long>(g), static_cast<long>(b));

    long t = static_cast<long>(row_subsets.size());
    RationalMatrix m2(static_cast<long>(out_basis.size()) * t, m1_rows);
    for (size_t g = 0; g < mid_basis.size(); ++g) {
        const MultiIndex& gamma = mid_basis[g];
        for (long sub = 0; sub < s; ++sub) {
            const auto& sset = col_subsets[static_cast<size_t>(sub)];
            for (int j = 0; j < nv; ++j) {
                if (gamma[j] == 0) continue;
                if (std::find(sset.begin(), sset.end(), j) != sset.end()) continue;
                auto tset = sset;
                tset.insert(std::upper_bound(tset.begin(), tset.end(), j), j);
                MultiIndex reduced = gamma;
                reduced[j] -= 1;
                long out_row =
                    monomial_position(out_basis, reduced) * t +
                    static_cast<long>(std::lower_bound(row_subsets.begin(), row_subsets.end(),
                                                       tset) -
                                      row_subsets.begin());
                m2.at(out_row, static_cast<long>(g) * s + sub) +=
                    Rat(gamma[j]) * Rat(detail::insertion_parity(sset, j));
            }
        }
    }

    RationalMatrix prod(m2.rows(), m1_cols);
    for (long r = 0; r < m2.rows(); ++r)
        for (long c = 0; c < m1_cols; ++c) {
            Rat acc(0);
            for (long k = 0; k < m1_rows; ++k) acc += m2.at(r, k) * m1.at(k, c);
            prod.at(r, c) = acc;
        }
    return prod;
}

bool matrices_equal(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (long r = 0; r < a.rows(); ++r)
        for (long c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c)) return false;
    return true;
}

}  // namespace

TEST_CASE("catalecticant ranks of named forms") {
    for (int d = 2; d <= 5; ++d) {
        Polynomial pure = Polynomial::monomial(MultiIndex{d, 0, 0});
        for (int i = 0; i <= d; ++i) CHECK(rank(catalecticant(pure, i).matrix) == 1);
    }
    Polynomial xyz = Polynomial::monomial(MultiIndex{1, 1, 1});
    CHECK(rank(catalecticant(xyz, 1).matrix) == 3);

    Polynomial cubic = parse_polynomial("x0^2*x1 + x0*x2^2");
    CHECK(rank(catalecticant(cubic, 1).matrix) == 3);

    CHECK_THROWS_AS(catalecticant(xyz, 4), std::invalid_argument);
}

TEST_CASE("catalecticant entries match the contraction definition") {
    Polynomial f = parse_polynomial("x0^2*x1 - 2*x1^3");
    CatalecticantMatrix cat = catalecticant(f, 1);
    for (size_t c = 0; c < cat.col_basis.size(); ++c) {
        Polynomial image = apolar_apply(Polynomial::monomial(cat.col_basis[c]), f);
        for (size_t r = 0; r < cat.row_basis.size(); ++r)
            CHECK(cat.matrix.at(static_cast<long>(r), static_cast<long>(c)) ==
                  image.coefficient(cat.row_basis[r]));
    }
}

TEST_CASE("apolar Hilbert functions") {
    Polynomial xyz = Polynomial::monomial(MultiIndex{1, 1, 1});
    CHECK(apolar_hf(xyz).values == std::vector<long>{1, 3, 3, 1});

    Polynomial pure = Polynomial::monomial(MultiIndex{6, 0});
    CHECK(apolar_hf(pure).values == std::vector<long>(7, 1));

    Polynomial sq = Polynomial::monomial(MultiIndex{2, 2});
    CHECK(apolar_hf(sq).values == std::vector<long>{1, 2, 3, 2, 1});
}

TEST_CASE("catalecticant lower bound") {
    CHECK(catalecticant_lower_bound(Polynomial::monomial(MultiIndex{1, 1, 1})) == 3);
    CHECK(catalecticant_lower_bound(Polynomial::monomial(MultiIndex{7, 0})) == 1);
    CHECK(catalecticant_lower_bound(elementary_symmetric(4, 3)) == 4);
}

TEST_CASE("Gorenstein symmetry of the apolar Hilbert function") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 3);
        int d = 2 + static_cast<int>(rng() % 4);
        Polynomial f = random_form(rng, nv, d);
        if (f.is_zero()) continue;
        auto hf = apolar_hf(f).values;
        for (int i = 0; i <= d; ++i)
            CHECK(hf[static_cast<size_t>(i)] == hf[static_cast<size_t>(d - i)]);
    }
}

TEST_CASE("Koszul flattening equals the two-map composition") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 6; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 2);
        int d = 3 + static_cast<int>(rng() % 2);
        Polynomial f = random_form(rng, nv, d);
        if (f.is_zero()) continue;
        for (int i = 1; i <= d - 1; ++i)
            for (int p = 1; p <= nv - 1; ++p)
                CHECK(matrices_equal(koszul_flattening(f, i, p).matrix,
                                     koszul_by_composition(f, i, p)));
    }
}

TEST_CASE("Koszul flattening of a pure power has the normalizing rank") {
    for (int nv = 2; nv <= 4; ++nv)
        for (int d = 2; d <= 4; ++d) {
            std::vector<int> e(static_cast<size_t>(nv), 0);
            e[0] = d;
            Polynomial pure = Polynomial::monomial(MultiIndex(e));
            for (int i = 0; i <= d - 1; ++i)
                for (int p = 1; p <= nv - 1; ++p)
                    CHECK(rank(koszul_flattening(pure, i, p).matrix) ==
                          binomial_l(nv - 1, p - 1));
        }
}

TEST_CASE("Koszul lower bound values for x0*x1*x2") {
    Polynomial xyz = Polynomial::monomial(MultiIndex{1, 1, 1});
    // denominator binom(2, 0) = 1 at p = 1
    CHECK(binomial_l(2, 0) == 1);
    KoszulFlatteningMatrix k1 = koszul_flattening(xyz, 1, 1);
    CHECK(rank(k1.matrix) == 3);
    CHECK(koszul_lower_bound(xyz, 1, 1) == 3);
    // the p = 2 flattening is strictly stronger than the catalecticant bound
    KoszulFlatteningMatrix k2 = koszul_flattening(xyz, 1, 2);
    CHECK(rank(k2.matrix) == 8);
    CHECK(koszul_lower_bound(xyz, 1, 2) == 4);
    // degenerate p = 0 never contributes
    CHECK(koszul_lower_bound(xyz, 1, 0) == 0);
}

TEST_CASE("surjective catalecticant gradient rank") {
    Polynomial f = Polynomial::monomial(MultiIndex{2, 2, 2});
    auto v = surjective_cat_gradient_rank(f, 4);
    REQUIRE(v);
    CHECK(*v == 6);

    Polynomial pure = Polynomial::monomial(MultiIndex{5, 0, 0});
    CHECK(!surjective_cat_gradient_rank(pure, 2));

    std::mt19937 rng(41);
    Polynomial quartic = random_form(rng, 3, 4, 9);
    auto w = surjective_cat_gradient_rank(quartic, 3);
    REQUIRE(w);
    CHECK(*w == 3);
}
