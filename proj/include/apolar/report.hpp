#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "apolarity.hpp"
#include "catalecticant.hpp"
#include "families.hpp"
#include "numeric.hpp"
#include "points.hpp"
#include "polynomial.hpp"
#include "sylvester.hpp"

namespace apolar {

using Json = nlohmann::json;

inline Json json_of(const Rat& q) { return q.get_str(); }

inline Json json_of(const Complex& z) {
    return Json{{"re", format_real(z.re)}, {"im", format_real(z.im)}};
}

inline Json json_of(const HFTable& t) {
    const char* src = t.source == HFTable::Source::ApolarAlgebra ? "apolar-algebra"
                      : t.source == HFTable::Source::PointSet    ? "point-set"
                                                                 : "bigraded-slice";
    return Json{{"values", t.values}, {"source", src}};
}

inline Json json_of(const GradedIdealSlice& s, char var = 'y') {
    Json basis = Json::array();
    for (const Polynomial& g : s.basis) basis.push_back(to_string(g, var));
    return Json{{"degree", s.degree}, {"dimension", s.dimension()}, {"basis", basis}};
}

inline Json json_of(const DecompositionCertificate& c) {
    Json j;
    j["mode"] = c.mode == DecompositionCertificate::Mode::Exact ? "exact" : "numeric";
    j["length"] = c.length();
    if (c.mode == DecompositionCertificate::Mode::Exact) {
        Json pts = Json::array();
        for (const LinearForm& p : c.points) {
            Json coords = Json::array();
            for (const Rat& q : p.coefficients) coords.push_back(json_of(q));
            pts.push_back(coords);
        }
        j["points"] = pts;
        Json grid = Json::array();
        for (const auto& row : c.coefficients) {
            Json r = Json::array();
            for (const Rat& q : row) r.push_back(json_of(q));
            grid.push_back(r);
        }
        j["coefficients"] = grid;
        j["residual"] = "0";
    } else {
        Json pts = Json::array();
        for (const ComplexLinearForm& p : c.numeric_points) {
            Json coords = Json::array();
            for (const Complex& z : p.coefficients) coords.push_back(json_of(z));
            pts.push_back(coords);
        }
        j["points"] = pts;
        Json grid = Json::array();
        for (const auto& row : c.numeric_coefficients) {
            Json r = Json::array();
            for (const Complex& z : row) r.push_back(json_of(z));
            grid.push_back(r);
        }
        j["coefficients"] = grid;
        j["residual"] = format_real(c.residual);
        j["residual_double"] = mpf_get_d(c.residual.get_mpf_t());
    }
    return j;
}

inline Json json_of(const RankValue& v) {
    Json j;
    j["label"] = v.label;
    if (v.exact) {
        j["exact"] = *v.exact;
        j["provenance"] = v.exact_provenance;
    }
    j["lower"] = v.lower();
    auto hi = v.upper();
    if (hi) j["upper"] = *hi;
    Json lows = Json::array();
    for (const BoundEntry& b : v.lower_bounds)
        lows.push_back(Json{{"value", b.value}, {"provenance", b.provenance}});
    j["lower_bounds"] = lows;
    Json his = Json::array();
    for (const BoundEntry& b : v.upper_bounds)
        his.push_back(Json{{"value", b.value}, {"provenance", b.provenance}});
    j["upper_bounds"] = his;
    return j;
}

inline Json json_of(const RankReport& r) {
    Json chain = Json::array();
    for (const RankValue& v : r.rank_chain) chain.push_back(json_of(v));
    Json cchain = Json::array();
    for (const RankValue& v : r.cactus_chain) cchain.push_back(json_of(v));
    Json j{{"family", family_name(r.family)},
           {"k", r.k},
           {"hilbert_function", json_of(r.hf)},
           {"rank_chain", chain},
           {"cactus_chain", cchain},
           {"chain_consistent", r.chain_consistent}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline Json json_of(const BigradedHFTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.values) rows.push_back(row);
    return Json{{"rows", rows}};
}

inline Json json_of(const SylvesterResult& s) {
    Json j{{"e1", s.e1},
           {"e2", s.e2},
           {"g1", to_string(s.g1, 'y')},
           {"g2", to_string(s.g2, 'y')},
           {"g1_squarefree", s.g1_squarefree},
           {"rank", s.rank},
           {"cactus_rank", s.cactus_rank}};
    if (s.certificate) j["certificate"] = json_of(*s.certificate);
    return j;
}

/// Stopwatch for the timing field of report documents.
class Stopwatch {
   public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        auto end = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(end - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

inline Json report_document(const std::string& command, Json input, Json result,
                            const Stopwatch& watch) {
    return Json{{"command", command},
                {"input", std::move(input)},
                {"result", std::move(result)},
                {"precision_bits", numeric_precision_bits()},
                {"timing_ms", watch.elapsed_ms()}};
}

}  // namespace apolar
