#include <catch2/catch_amalgamated.hpp>

#include <apolar/families.hpp>
#include <apolar/parse.hpp>

using namespace apolar;

TEST_CASE("monomial rank formulas") {
    CHECK(monomial_rank(MultiIndex{1, 1, 1}) == 4);
    CHECK(monomial_rank(MultiIndex{1, 2}) == 3);
    CHECK(monomial_rank(MultiIndex{7}) == 1);
    CHECK(monomial_rank(MultiIndex{0, 5, 0}) == 1);

    CHECK(monomial_cactus_rank(MultiIndex{1, 1, 2}) == 4);
    CHECK(monomial_cactus_rank(MultiIndex{1, 2}) == 2);
    CHECK(monomial_cactus_rank(MultiIndex{4}) == 1);
}

TEST_CASE("monomial gradient rank case split") {
    MonomialGradientRank a = monomial_gradient_rank(MultiIndex{2, 2}, 1);
    CHECK(a.covered);
    CHECK(a.value == 3);

    MonomialGradientRank b = monomial_gradient_rank(MultiIndex{2, 2, 2}, 4);
    CHECK(b.covered);
    CHECK(b.value == 6);

    MonomialGradientRank c = monomial_gradient_rank(MultiIndex{1, 3}, 2);
    CHECK(!c.covered);
    CHECK(c.lower >= 1);
    CHECK(c.lower <= c.upper);
    CHECK(c.upper <= monomial_rank(MultiIndex{1, 3}));

    CHECK(monomial_gradient_cactus_rank(MultiIndex{1, 1, 2}) == 4);
    CHECK(monomial_gradient_cactus_rank(MultiIndex{2, 2}) == 3);
    CHECK(monomial_gradient_cactus_rank(MultiIndex{5}) == 1);
}

TEST_CASE("monomial apolar generators annihilate the monomial") {
    auto gens = monomial_apolar_generators(MultiIndex{1, 1, 1});
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == Polynomial::monomial(MultiIndex{2, 0, 0}));
    CHECK(verify_apolar(Polynomial::monomial(MultiIndex{1, 1, 1}), gens));

    auto gens21 = monomial_apolar_generators(MultiIndex{2, 1});
    CHECK(gens21[0] == Polynomial::monomial(MultiIndex{3, 0}));
    CHECK(gens21[1] == Polynomial::monomial(MultiIndex{0, 2}));
    CHECK(verify_apolar(Polynomial::monomial(MultiIndex{2, 1}), gens21));

    auto pure = monomial_apolar_generators(MultiIndex{4, 0, 0});
    CHECK(pure[0] == Polynomial::monomial(MultiIndex{5, 0, 0}));
    CHECK(pure[1] == Polynomial::monomial(MultiIndex{0, 1, 0}));
    CHECK(verify_apolar(Polynomial::monomial(MultiIndex{4, 0, 0}), pure));
}

TEST_CASE("elementary symmetric rank formulas") {
    ElementarySymmetricRank r43 = elementary_symmetric_rank(4, 3);
    CHECK(r43.exact);
    CHECK(r43.value == 5);

    ElementarySymmetricRank r33 = elementary_symmetric_rank(3, 3);
    CHECK(r33.exact);
    CHECK(r33.value == 4);
    CHECK(r33.value == monomial_rank(MultiIndex{1, 1, 1}));  // cross-family consistency

    ElementarySymmetricRank r42 = elementary_symmetric_rank(4, 2);
    CHECK(!r42.exact);
    CHECK(r42.lower == 1);
    CHECK(r42.upper == 5);
    // the even-degree gap is pinned by the formulas
    CHECK(r42.upper - r42.lower == binomial_l(3, 1) + 1);
    ElementarySymmetricRank r44 = elementary_symmetric_rank(4, 4);
    CHECK(r44.upper - r44.lower == binomial_l(3, 2) + 1);

    CHECK_THROWS_AS(elementary_symmetric_rank(3, 4), std::invalid_argument);
}

TEST_CASE("elementary symmetric gradient rank") {
    ElementarySymmetricRank g43 = elementary_symmetric_gradient_rank(4, 3);
    CHECK(g43.exact);
    CHECK(g43.value == 5);

    ElementarySymmetricRank g33 = elementary_symmetric_gradient_rank(3, 3);
    CHECK(g33.exact);
    CHECK(g33.value == 4);

    ElementarySymmetricRank g44 = elementary_symmetric_gradient_rank(4, 4);
    CHECK(!g44.exact);
    CHECK(g44.lower == (1 + 4 + 6) - 3 - 1);
}

TEST_CASE("base_point_free_degree") {
    auto slices_of = [](const Polynomial& f) {
        std::vector<GradedIdealSlice> slices;
        for (int i = 0; i <= f.degree() + 1; ++i)
            slices.push_back(i <= f.degree() ? apolar_slice(f, i)
                                             : detail::full_slice(f.num_vars(), i));
        return slices;
    };

    // Ann(x^alpha) becomes base point free exactly at max exponent + 1
    CHECK(base_point_free_degree(slices_of(Polynomial::monomial(MultiIndex{1, 1, 2})), 3) == 3);
    CHECK(base_point_free_degree(slices_of(Polynomial::monomial(MultiIndex{2, 1})), 2) == 3);
    CHECK(base_point_free_degree(slices_of(Polynomial::monomial(MultiIndex{3, 0, 0})), 3) == 4);

    // a full degree-1 slice is already base point free
    std::vector<GradedIdealSlice> linear{detail::full_slice(3, 0), detail::full_slice(3, 1)};
    linear[0].basis.clear();  // degree 0 slice of a proper ideal is empty
    CHECK(base_point_free_degree(linear, 3) == 1);
}

TEST_CASE("cactus_lower_bound") {
    CHECK(cactus_lower_bound(Polynomial::monomial(MultiIndex{1, 1, 2}), 1) == 4);
    CHECK(cactus_lower_bound(Polynomial::monomial(MultiIndex{1, 1, 1}), 0) == 4);
    CHECK(cactus_lower_bound(Polynomial::monomial(MultiIndex{6, 0}), 0) == 1);
}

TEST_CASE("family detection is syntactic") {
    CHECK(detect_family(Polynomial::monomial(MultiIndex{1, 2})) == FormFamily::Binary);
    CHECK(detect_family(Polynomial::monomial(MultiIndex{2, 1, 1})) == FormFamily::Monomial);
    CHECK(detect_family(elementary_symmetric(4, 3)) == FormFamily::ElementarySymmetric);
    CHECK(detect_family(parse_polynomial("x0^2*x1 + x0*x2^2")) == FormFamily::Generic);
    CHECK(detect_family(parse_polynomial("x0*x1*x2")) == FormFamily::Monomial);
}

TEST_CASE("rank_report for a monomial is a chain of equalities") {
    RankReport rep = rank_report(Polynomial::monomial(MultiIndex{1, 1, 1}), 1);
    CHECK(rep.family == FormFamily::Monomial);
    CHECK(rep.chain_consistent);
    for (const RankValue& v : rep.rank_chain) {
        REQUIRE(v.exact);
        CHECK(*v.exact == 4);
    }
    for (const RankValue& v : rep.cactus_chain) {
        REQUIRE(v.exact);
        CHECK(*v.exact == 4);
    }
}

TEST_CASE("rank_report for the maximal-rank plane cubic") {
    Polynomial f = parse_polynomial("x0^2*x1 + x0*x2^2");
    std::vector<ExtraUpperBound> extras{
        {ExtraUpperBound::Target::Gradient, 5, "five-point-certificate"}};
    RankReport rep = rank_report(f, 1, extras);
    CHECK(rep.family == FormFamily::Generic);
    CHECK(rep.chain_consistent);
    CHECK(!rep.rank_chain[0].exact);  // no exact claim for generic ternary cubics
    CHECK(rep.rank_chain[0].lower() >= 3);
    auto grad_hi = rep.rank_chain[2].upper();
    REQUIRE(grad_hi);
    CHECK(*grad_hi == 5);
}

TEST_CASE("rank_report for binary forms is exact everywhere") {
    Polynomial f = Polynomial::monomial(MultiIndex{1, 3});
    RankReport rep = rank_report(f, 1);
    CHECK(rep.family == FormFamily::Binary);
    CHECK(rep.chain_consistent);
    REQUIRE(rep.rank_chain[0].exact);
    CHECK(*rep.rank_chain[0].exact == 4);
    REQUIRE(rep.rank_chain[2].exact);
    CHECK(*rep.rank_chain[2].exact == 4);
    REQUIRE(rep.cactus_chain[0].exact);
    CHECK(*rep.cactus_chain[0].exact == 2);
    REQUIRE(rep.cactus_chain[2].exact);
    CHECK(*rep.cactus_chain[2].exact == 2);
}

TEST_CASE("monomial bounds stay mutually consistent") {
    for (int n = 2; n <= 3; ++n) {
        std::vector<int> alpha(static_cast<size_t>(n), 1);
        for (int extra = 0; extra <= 2; ++extra) {
            alpha[0] = 1 + extra;
            MultiIndex a{std::vector<int>(alpha)};
            Polynomial f = Polynomial::monomial(a);
            long cat = catalecticant_lower_bound(f);
            long cactus = monomial_cactus_rank(a);
            long waring = monomial_rank(a);
            CHECK(cat <= cactus);
            CHECK(cactus <= waring);
            CHECK(cactus_lower_bound(f, 0) == cactus);
        }
    }
}
