#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <apolar/points.hpp>

using namespace apolar;

namespace {

PointSet four_general_points() {
    return PointSet::from_rows({{Rat(1), Rat(0), Rat(0)},
                                {Rat(0), Rat(1), Rat(0)},
                                {Rat(0), Rat(0), Rat(1)},
                                {Rat(1), Rat(1), Rat(1)}});
}

PointSet random_points(std::mt19937& rng, int nvars, int count) {
    std::uniform_int_distribution<int> coord(-6, 6);
    std::vector<ProjectivePoint> pts;
    while (static_cast<int>(pts.size()) < count) {
        std::vector<Rat> c(static_cast<size_t>(nvars));
        bool zero = true;
        for (auto& v : c) {
            v = Rat(coord(rng));
            zero &= v == 0;
        }
        if (zero) continue;
        ProjectivePoint cand(std::move(c));
        bool dup = false;
        for (const auto& p : pts) dup |= p == cand;
        if (!dup) pts.push_back(std::move(cand));
    }
    return PointSet(std::move(pts));
}

}  // namespace

TEST_CASE("PointSet construction guards") {
    CHECK_THROWS_AS(PointSet::from_rows({{Rat(0), Rat(0)}}), std::invalid_argument);
    // projective duplicates are rejected even in different scalings
    CHECK_THROWS_AS(PointSet::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}),
                    std::invalid_argument);
}

TEST_CASE("ideal_slice_points examples") {
    PointSet single = PointSet::from_rows({{Rat(1), Rat(0), Rat(0)}});
    GradedIdealSlice s = ideal_slice_points(single, 1);
    REQUIRE(s.dimension() == 2);
    CHECK(s.basis[0] == Polynomial::monomial(MultiIndex{0, 1, 0}));
    CHECK(s.basis[1] == Polynomial::monomial(MultiIndex{0, 0, 1}));

    PointSet two = PointSet::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(ideal_slice_points(two, 1).dimension() == 0);
    CHECK(ideal_slice_points(two, 2).dimension() == 1);

    PointSet collinear =
        PointSet::from_rows({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)},
                             {Rat(1), Rat(1), Rat(0)}});
    GradedIdealSlice line = ideal_slice_points(collinear, 1);
    REQUIRE(line.dimension() == 1);
    CHECK(line.basis[0] == Polynomial::monomial(MultiIndex{0, 0, 1}));
}

TEST_CASE("hf_points examples") {
    CHECK(hf_points(four_general_points()).values == std::vector<long>{1, 3, 4});

    PointSet collinear =
        PointSet::from_rows({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)},
                             {Rat(1), Rat(1), Rat(0)}});
    CHECK(hf_points(collinear).values == std::vector<long>{1, 2, 3});

    PointSet single = PointSet::from_rows({{Rat(1), Rat(2), Rat(3)}});
    CHECK(hf_points(single).values == std::vector<long>{1});
}

TEST_CASE("regularity_index examples") {
    CHECK(regularity_index(PointSet::from_rows({{Rat(1), Rat(1)}})) == 0);
    CHECK(regularity_index(four_general_points()) == 2);

    // r points on a line in P^2 have regularity r - 1
    for (int r = 2; r <= 5; ++r) {
        std::vector<std::vector<Rat>> rows;
        for (int t = 0; t < r; ++t) rows.push_back({Rat(1), Rat(t), Rat(0)});
        CHECK(regularity_index(PointSet::from_rows(rows)) == r - 1);
    }
}

TEST_CASE("artinian_reduction_hf examples") {
    PointSet single = PointSet::from_rows({{Rat(1), Rat(2), Rat(3)}});
    HFTable t = artinian_reduction_hf(single, LinearForm({Rat(1), Rat(1), Rat(1)}));
    CHECK(t.values == std::vector<long>{1});
    CHECK(t.sum() == 1);

    HFTable t4 = artinian_reduction_hf(four_general_points(), LinearForm({Rat(1), Rat(2), Rat(5)}));
    CHECK(t4.values == std::vector<long>{1, 2, 1});
    CHECK(t4.sum() == 4);

    // a hyperplane through one of the points violates the precondition
    CHECK_THROWS_AS(artinian_reduction_hf(four_general_points(),
                                          LinearForm({Rat(1), Rat(-1), Rat(0)})),
                    std::invalid_argument);
}

TEST_CASE("generated_in_degree_at_most examples") {
    CHECK(generated_in_degree_at_most(four_general_points(), 2));

    PointSet three = PointSet::from_rows(
        {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
    CHECK(!generated_in_degree_at_most(three, 1));
    CHECK(generated_in_degree_at_most(three, 2));

    PointSet single = PointSet::from_rows({{Rat(1), Rat(0), Rat(0)}});
    CHECK(generated_in_degree_at_most(single, 1));
}

TEST_CASE("Hilbert function of points increases to the cardinality") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 3);
        int count = 1 + static_cast<int>(rng() % 8);
        PointSet x = random_points(rng, nv, count);
        auto hf = hf_points(x).values;
        CHECK(hf.back() == x.size());
        for (size_t i = 0; i + 1 < hf.size(); ++i) CHECK(hf[i] < hf[i + 1]);
    }
}

TEST_CASE("apolarity lemma: ideal containment matches decomposition solvability") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 15; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 2);
        int d = 2 + static_cast<int>(rng() % 2);
        int count = 2 + static_cast<int>(rng() % 3);
        PointSet x = random_points(rng, nv, count);

        // containment of I_X in Ann(f), checked on slice bases up to reg+1
        auto contained = [&](const Polynomial& f) {
            for (int j = 1; j <= regularity_index(x) + 1; ++j) {
                GradedIdealSlice s = ideal_slice_points(x, j);
                if (!s.basis.empty() && !verify_apolar(f, s.basis)) return false;
            }
            return true;
        };
        std::vector<LinearForm> pts;
        for (const ProjectivePoint& p : x.points()) pts.emplace_back(p.coords);

        // a form built from the points is decomposable and passes containment
        Polynomial in_span(nv, d);
        for (const LinearForm& p : pts)
            in_span = in_span + power_of_linear_form(p, d) * Rat(1 + static_cast<int>(rng() % 3));
        if (!in_span.is_zero()) {
            CHECK(contained(in_span));
            CHECK(decomposition_coefficients({in_span}, pts).consistent);
        }

        // for an arbitrary form the two sides agree either way
        Polynomial f(nv, d);
        for (const MultiIndex& a : monomial_basis(nv, d)) f.add_term(a, Rat(coeff(rng)));
        if (f.is_zero()) continue;
        CHECK(contained(f) == decomposition_coefficients({f}, pts).consistent);
    }
}

TEST_CASE("first differences sum to the number of points") {
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> coord(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 3);
        int count = 1 + static_cast<int>(rng() % 8);
        PointSet x = random_points(rng, nv, count);
        // an all-positive functional cannot vanish on all-nonnegative points;
        // retry until it avoids the set
        for (int attempt = 0; attempt < 50; ++attempt) {
            std::vector<Rat> c(static_cast<size_t>(nv));
            for (auto& v : c) v = Rat(coord(rng));
            try {
                HFTable t = artinian_reduction_hf(x, LinearForm(std::move(c)));
                CHECK(t.sum() == x.size());
                break;
            } catch (const std::invalid_argument&) {
            }
        }
    }
}
