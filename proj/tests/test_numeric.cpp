#include <catch2/catch_amalgamated.hpp>

#include <apolar/numeric.hpp>

using namespace apolar;

namespace {

double dbl(const Real& v) { return mpf_get_d(v.get_mpf_t()); }

}  // namespace

TEST_CASE("complex arithmetic basics") {
    set_numeric_precision_bits(128);
    Complex a(Real(3), Real(4));
    CHECK(dbl(a.abs()) == Catch::Approx(5.0));
    Complex b = a / a;
    CHECK(dbl(b.re) == Catch::Approx(1.0));
    CHECK(dbl(b.im) == Catch::Approx(0.0).margin(1e-30));
}

TEST_CASE("roots of a factored cubic") {
    set_numeric_precision_bits(128);
    // (u - 1)(u + 2)(u - 3) = u^3 - 2u^2 - 5u + 6
    std::vector<Complex> coeffs{Complex(Rat(6)), Complex(Rat(-5)), Complex(Rat(-2)),
                                Complex(Rat(1))};
    auto roots = polynomial_roots(coeffs);
    REQUIRE(roots.size() == 3);
    Real tol("1e-25");
    for (long e : {1L, -2L, 3L}) {
        bool hit = false;
        for (const Complex& z : roots)
            if ((z - Complex(e)).abs() < tol) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("roots of u^2 + 1") {
    set_numeric_precision_bits(128);
    std::vector<Complex> coeffs{Complex(Rat(1)), Complex(Rat(0)), Complex(Rat(1))};
    auto roots = polynomial_roots(coeffs);
    REQUIRE(roots.size() == 2);
    Real tol("1e-30");
    for (const Complex& z : roots) {
        CHECK(abs(z.re) < tol);
        CHECK(abs(abs(z.im) - 1) < tol);
    }
}

TEST_CASE("numeric decomposition matches an exact identity") {
    set_numeric_precision_bits(128);
    // x0*x1 = (1/4)(x0+x1)^2 - (1/4)(x0-x1)^2
    Polynomial xy = Polynomial::monomial(MultiIndex{1, 1});
    std::vector<ComplexLinearForm> pts;
    pts.emplace_back(std::vector<Complex>{Complex(Rat(1)), Complex(Rat(1))});
    pts.emplace_back(std::vector<Complex>{Complex(Rat(1)), Complex(Rat(-1))});
    NumericDecomposition sol = decomposition_coefficients_numeric({xy}, pts);
    CHECK(dbl(sol.residual) < 1e-30);
    CHECK(dbl(sol.coefficients[0][0].re) == Catch::Approx(0.25));
    CHECK(dbl(sol.coefficients[0][1].re) == Catch::Approx(-0.25));
}

TEST_CASE("precision setting is respected") {
    set_numeric_precision_bits(256);
    CHECK(numeric_precision_bits() >= 256);
    set_numeric_precision_bits(128);
    CHECK(numeric_precision_bits() >= 128);
    CHECK_THROWS_AS(set_numeric_precision_bits(8), std::invalid_argument);
}
