#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "parse.hpp"
#include "report.hpp"

namespace apolar {

/// Bundled worked examples from the literature, each pinned against stored
/// expectations so regressions show up as a dirty diff.
struct RegistryOutcome {
    bool pass = false;
    Json detail;
};

namespace registry_detail {

inline void record(RegistryOutcome& out, Json& checks, const std::string& name, bool ok,
                   Json expected, Json computed) {
    checks.push_back(Json{{"check", name},
                          {"pass", ok},
                          {"expected", std::move(expected)},
                          {"computed", std::move(computed)}});
    out.pass &= ok;
}

/// Pair of plane cubics x0^2*x1, x0^2*x2: the bigraded Hilbert table of the
/// attached two-slot tensor and the simultaneous apolar Hilbert function.
inline RegistryOutcome run_bigraded_cubic() {
    RegistryOutcome out;
    out.pass = true;
    Json checks = Json::array();

    std::vector<Polynomial> comps{parse_polynomial("x0^2*x1", 'x', 3),
                                  parse_polynomial("x0^2*x2", 'x', 3)};
    BigradedTensor t(2, comps);
    BigradedHFTable table = bigraded_apolar_hf(t);
    std::vector<std::vector<long>> expected{{1, 3, 3, 2}, {2, 3, 3, 1}};
    record(out, checks, "bigraded-hilbert-table", table.values == expected, expected,
           table.values);

    HFTable sim = simultaneous_apolar_hf(comps);
    record(out, checks, "simultaneous-hf-degree-2", sim.values[2] == 3, 3, sim.values[2]);

    GradedIdealSlice slice2 = simultaneous_apolar_slice(comps, 2);
    record(out, checks, "simultaneous-slice-2-dimension", slice2.dimension() == 3, 3,
           slice2.dimension());

    out.detail = Json{{"table", json_of(table)}, {"checks", checks}};
    return out;
}

/// The plane cubic of maximal Waring rank, x0*(x0*x1 + x2^2): containment of
/// the published apolar point ideal in the gradient annihilator, and the
/// five-point simultaneous decomposition of the gradient, checked numerically
/// with w = sqrt(-3).
inline RegistryOutcome run_maximal_cubic() {
    RegistryOutcome out;
    out.pass = true;
    Json checks = Json::array();

    Polynomial f = parse_polynomial("x0^2*x1 + x0*x2^2");
    std::vector<Polynomial> grad = gradient_set(f, 1);
    std::vector<Polynomial> gens{parse_polynomial("y1*y2", 'y', 3),
                                 parse_polynomial("y0^2*y2 + y0*y2^2 + y2^3", 'y', 3),
                                 parse_polynomial("y0^2*y1 - y0*y1^2", 'y', 3)};
    bool contained = verify_simultaneous_apolar(grad, gens);
    record(out, checks, "point-ideal-inside-gradient-annihilator", contained, true, contained);

    Real w_im = sqrt(Real(3));
    Complex w(Real(0), w_im);  // w^2 = -3
    Complex one(Rat(1)), zero(Rat(0)), minus_two(Rat(-2));
    std::vector<ComplexLinearForm> pts;
    pts.emplace_back(std::vector<Complex>{one, zero, zero});                    // [x0]
    pts.emplace_back(std::vector<Complex>{zero, one, zero});                    // [x1]
    pts.emplace_back(std::vector<Complex>{one, Complex(Rat(-1)), zero});        // [x0 - x1]
    pts.emplace_back(std::vector<Complex>{w + one, zero, minus_two});           // [(w+1)x0 - 2x2]
    pts.emplace_back(std::vector<Complex>{Complex(Rat(1)) - w, zero, minus_two});

    DecompositionCertificate cert = make_numeric_certificate(grad, pts);
    double residual = mpf_get_d(cert.residual.get_mpf_t());
    record(out, checks, "five-point-gradient-residual", residual <= 1e-9, "<= 1e-9", residual);

    // published coefficient grid, columns in the point order above
    std::vector<std::vector<Complex>> expected{
        {Complex(Rat(2)), Complex(Rat(1)), Complex(Rat(-1)),
         (w + Complex(Rat(3))) / Complex(Rat(24)), (Complex(Rat(3)) - w) / Complex(Rat(24))},
        {Complex(Rat(1)), zero, zero, zero, zero},
        {Complex(Rat(1)), zero, zero, w / Complex(Rat(12)), Complex(Rat(0)) - w / Complex(Rat(12))}};
    Real grid_err(0);
    for (size_t r = 0; r < expected.size(); ++r)
        for (size_t c = 0; c < expected[r].size(); ++c) {
            Real e = (cert.numeric_coefficients[r][c] - expected[r][c]).abs();
            if (e > grid_err) grid_err = e;
        }
    double grid_err_d = mpf_get_d(grid_err.get_mpf_t());
    record(out, checks, "coefficient-grid-matches", grid_err_d <= 1e-9, "<= 1e-9", grid_err_d);

    out.detail = Json{{"certificate", json_of(cert)}, {"checks", checks}};
    return out;
}

/// Gradient of the binary quintic x0*x1^4: the point set cut out by
/// y0*(y0^4 - y1^4) is simultaneously apolar to the first derivatives and
/// yields a five-point simultaneous decomposition.
inline RegistryOutcome run_binary_remark() {
    RegistryOutcome out;
    out.pass = true;
    Json checks = Json::array();

    Polynomial f = parse_polynomial("x0*x1^4");
    std::vector<Polynomial> grad = gradient_set(f, 1);
    Polynomial gen = parse_polynomial("y0^5 - y0*y1^4", 'y', 2);
    bool contained = verify_simultaneous_apolar(grad, {gen});
    record(out, checks, "generator-annihilates-gradient", contained, true, contained);

    long r = binary_rank(f);
    record(out, checks, "rank-is-degree", r == 5, 5, r);
    long gr = binary_gradient_rank(f, 1);
    record(out, checks, "gradient-rank", gr == 5, 5, gr);

    Complex i_unit(Real(0), Real(1));
    Complex one(Rat(1)), zero(Rat(0));
    std::vector<ComplexLinearForm> pts;
    pts.emplace_back(std::vector<Complex>{zero, one});            // [x1]
    pts.emplace_back(std::vector<Complex>{one, one});             // x0 + x1
    pts.emplace_back(std::vector<Complex>{one, Complex(Rat(-1))});
    pts.emplace_back(std::vector<Complex>{one, i_unit});
    pts.emplace_back(std::vector<Complex>{one, Complex(Rat(0)) - i_unit});
    DecompositionCertificate cert = make_numeric_certificate(grad, pts);
    double residual = mpf_get_d(cert.residual.get_mpf_t());
    record(out, checks, "five-point-gradient-residual", residual <= 1e-9, "<= 1e-9", residual);

    out.detail = Json{{"certificate", json_of(cert)}, {"checks", checks}};
    return out;
}

/// The 2-fat point at [x0], cut out by (y1, y2)^2, is apolar to the pair
/// {x0^2*x1, x0^2*x2}: a degree-3 scheme witnessing simultaneous cactus rank 3.
inline RegistryOutcome run_fat_point() {
    RegistryOutcome out;
    out.pass = true;
    Json checks = Json::array();

    std::vector<Polynomial> family{parse_polynomial("x0^2*x1", 'x', 3),
                                   parse_polynomial("x0^2*x2", 'x', 3)};
    std::vector<Polynomial> gens{parse_polynomial("y1^2", 'y', 3),
                                 parse_polynomial("y1*y2", 'y', 3),
                                 parse_polynomial("y2^2", 'y', 3)};
    bool contained = verify_simultaneous_apolar(family, gens);
    record(out, checks, "fat-point-apolar", contained, true, contained);

    HFTable sim = simultaneous_apolar_hf(family);
    long max_hf = 0;
    for (long v : sim.values) max_hf = std::max(max_hf, v);
    record(out, checks, "scheme-length-matches-hf-bound", max_hf == 3, 3, max_hf);

    out.detail = Json{{"checks", checks}};
    return out;
}

}  // namespace registry_detail

inline const std::map<std::string, std::function<RegistryOutcome()>>& example_registry() {
    static const std::map<std::string, std::function<RegistryOutcome()>> reg{
        {"bigraded-cubic", registry_detail::run_bigraded_cubic},
        {"maximal-cubic", registry_detail::run_maximal_cubic},
        {"binary-remark", registry_detail::run_binary_remark},
        {"fat-point", registry_detail::run_fat_point},
    };
    return reg;
}

}  // namespace apolar
