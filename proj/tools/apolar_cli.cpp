// Command-line front end: every subcommand prints a single JSON report
// document on stdout. Exit codes: 0 success, 2 usage, 3 parse error,
// 4 computation precondition, 5 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <apolar/apolar.hpp>
#include <apolar/registry.hpp>
#include <apolar/report.hpp>

namespace {

using namespace apolar;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitComputation = 4;
constexpr int kExitVerification = 5;

unsigned long precision_from_env() {
    const char* env = std::getenv("APOLAR_PRECISION_BITS");
    if (!env) return 128;
    char* end = nullptr;
    unsigned long bits = std::strtoul(env, &end, 10);
    if (end == env || bits < 24) return 128;
    return bits;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << std::endl; }

PointSet load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open point file: " + path);
    return PointSet::from_rows(parse_point_rows(in));
}

std::vector<Polynomial> load_generators(const std::string& path, int min_vars) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open generator file: " + path);
    return parse_generator_lines(in, min_vars);
}

int run_hf(const std::string& form_text) {
    Stopwatch watch;
    Polynomial f = parse_polynomial(form_text);
    HFTable t = apolar_hf(f);
    Json result{{"hilbert_function", json_of(t)},
                {"catalecticant_lower_bound", catalecticant_lower_bound(f)}};
    emit(report_document("hf", Json{{"form", to_string(f)}}, result, watch));
    return kExitOk;
}

int run_cat(const std::string& form_text, int i, bool has_i, int koszul_p) {
    Stopwatch watch;
    Polynomial f = parse_polynomial(form_text);
    Json result;
    if (has_i) {
        CatalecticantMatrix cat = catalecticant(f, i);
        result["i"] = i;
        result["rows"] = cat.matrix.rows();
        result["cols"] = cat.matrix.cols();
        result["rank"] = rank(cat.matrix);
        if (koszul_p >= 0) {
            KoszulFlatteningMatrix kf = koszul_flattening(f, i, koszul_p);
            result["koszul"] = Json{{"p", koszul_p},
                                    {"rows", kf.matrix.rows()},
                                    {"cols", kf.matrix.cols()},
                                    {"rank", rank(kf.matrix)},
                                    {"lower_bound", koszul_lower_bound(f, i, koszul_p)}};
        }
    } else {
        result["hilbert_function"] = json_of(apolar_hf(f));
        result["catalecticant_lower_bound"] = catalecticant_lower_bound(f);
    }
    emit(report_document("cat", Json{{"form", to_string(f)}}, result, watch));
    return kExitOk;
}

int run_rank(const std::string& form_text, int k) {
    Stopwatch watch;
    Polynomial f = parse_polynomial(form_text);
    RankReport rep = rank_report(f, k);
    emit(report_document("rank", Json{{"form", to_string(f)}, {"k", k}}, json_of(rep), watch));
    return kExitOk;
}

int run_sylvester(const std::string& form_text, bool decompose) {
    Stopwatch watch;
    Polynomial f = parse_polynomial(form_text);
    SylvesterResult s = sylvester_analyze(f, decompose);
    emit(report_document("sylvester", Json{{"form", to_string(f)}}, json_of(s), watch));
    return kExitOk;
}

int run_gradient(const std::string& form_text, int k) {
    Stopwatch watch;
    Polynomial f = parse_polynomial(form_text);
    if (k <= 0 || k >= f.degree())
        throw std::invalid_argument("gradient: 0 < k < deg(f) required");
    Json slices = Json::array();
    bool routes_agree = true;
    for (int i = 0; i <= f.degree() - k + 1; ++i) {
        GradedIdealSlice via_cat = gradient_apolar_slice(f, k, i);
        GradedIdealSlice via_partials = gradient_apolar_slice_by_partials(f, k, i);
        routes_agree &= via_cat == via_partials;
        slices.push_back(json_of(via_cat));
    }
    Json result{{"k", k},
                {"slices", slices},
                {"routes_agree", routes_agree},
                {"gradient_cactus_lower_bound", cactus_lower_bound(f, k)}};
    if (auto surj = surjective_cat_gradient_rank(f, k)) result["gradient_rank_exact"] = *surj;
    emit(report_document("gradient", Json{{"form", to_string(f)}, {"k", k}}, result, watch));
    return kExitOk;
}

int run_verify(const std::string& form_text, int gradient_k, const std::string& points_file,
               const std::string& generators_file) {
    Stopwatch watch;
    Polynomial f = parse_polynomial(form_text);
    std::vector<Polynomial> targets =
        gradient_k > 0 ? gradient_set(f, gradient_k) : std::vector<Polynomial>{f};

    Json result;
    bool verified = false;
    if (!points_file.empty()) {
        PointSet x = load_point_set(points_file);
        if (x.num_vars() != f.num_vars())
            throw std::invalid_argument("verify: point dimension does not match the form");
        int reg = regularity_index(x);
        bool contained = true;
        for (int j = 1; j <= reg + 1; ++j) {
            GradedIdealSlice s = ideal_slice_points(x, j);
            if (!s.basis.empty() && !verify_simultaneous_apolar(targets, s.basis))
                contained = false;
        }
        std::vector<LinearForm> pts;
        for (const ProjectivePoint& p : x.points()) pts.emplace_back(p.coords);
        DecompositionSolve sol = decomposition_coefficients(targets, pts);
        verified = contained && sol.consistent;
        result["ideal_contained"] = contained;
        result["decomposition_consistent"] = sol.consistent;
        if (sol.consistent) {
            auto cert = make_exact_certificate(targets, pts);
            result["certificate"] = json_of(*cert);
        }
    } else {
        std::vector<Polynomial> gens = load_generators(generators_file, f.num_vars());
        verified = verify_simultaneous_apolar(targets, gens);
        result["ideal_contained"] = verified;
    }
    result["verified"] = verified;
    Json input{{"form", to_string(f)}};
    if (gradient_k > 0) input["gradient"] = gradient_k;
    if (!points_file.empty()) input["points"] = points_file;
    if (!generators_file.empty()) input["generators"] = generators_file;
    emit(report_document("verify", input, result, watch));
    return verified ? kExitOk : kExitVerification;
}

int run_bigraded(const std::vector<std::string>& component_texts) {
    Stopwatch watch;
    std::vector<Polynomial> comps;
    int nvars = 1;
    for (const std::string& t : component_texts)
        nvars = std::max(nvars, parse_polynomial(t).num_vars());
    for (const std::string& t : component_texts) comps.push_back(parse_polynomial(t, 'x', nvars));
    BigradedTensor tensor(static_cast<int>(comps.size()), comps);
    BigradedHFTable table = bigraded_apolar_hf(tensor);
    Json input{{"components", component_texts}};
    Json result{{"table", json_of(table)},
                {"simultaneous_hf", json_of(simultaneous_apolar_hf(comps))}};
    emit(report_document("bigraded", input, result, watch));
    return kExitOk;
}

int run_paper_example(const std::string& id) {
    Stopwatch watch;
    const auto& reg = example_registry();
    auto it = reg.find(id);
    if (it == reg.end()) {
        std::string known;
        for (const auto& [name, fn] : reg) known += (known.empty() ? "" : ", ") + name;
        throw std::invalid_argument("unknown example id '" + id + "' (known: " + known + ")");
    }
    RegistryOutcome outcome = it->second();
    Json result{{"id", id}, {"pass", outcome.pass}, {"detail", outcome.detail}};
    emit(report_document("paper-example", Json{{"id", id}}, result, watch));
    return outcome.pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Waring rank bounds and apolarity certificates for symmetric tensors"};
    app.require_subcommand(1);

    unsigned long precision = precision_from_env();

    std::string form, points_file, generators_file, example_id;
    std::vector<std::string> components;
    int k = 1, cat_i = 0, koszul_p = -1, gradient_k = 0;
    bool decompose = false;

    auto* hf_cmd = app.add_subcommand("hf", "Apolar Hilbert function of a form");
    hf_cmd->add_option("form", form, "homogeneous polynomial in x0..xn")->required();

    auto* cat_cmd = app.add_subcommand("cat", "Catalecticant ranks and Koszul flattenings");
    cat_cmd->add_option("form", form)->required();
    auto* i_opt = cat_cmd->add_option("-i,--contraction", cat_i, "contraction degree");
    cat_cmd->add_option("--koszul", koszul_p, "also build the Koszul flattening with this p")
        ->needs(i_opt);

    auto* rank_cmd = app.add_subcommand("rank", "Assembled rank report with both chains");
    rank_cmd->add_option("form", form)->required();
    rank_cmd->add_option("-k,--order", k, "gradient order")->default_val(1);

    auto* syl_cmd = app.add_subcommand("sylvester", "Binary-form pipeline");
    syl_cmd->add_option("form", form)->required();
    syl_cmd->add_flag("--decompose", decompose, "emit a decomposition certificate");
    syl_cmd->add_option("--precision", precision, "numeric precision in bits");

    auto* grad_cmd = app.add_subcommand("gradient", "Gradient apolar slices and bounds");
    grad_cmd->add_option("form", form)->required();
    grad_cmd->add_option("-k,--order", k, "gradient order")->default_val(1);

    auto* verify_cmd = app.add_subcommand("verify", "Check apolarity certificates");
    verify_cmd->add_option("--form", form, "target form")->required();
    verify_cmd->add_option("--gradient", gradient_k, "verify against the k-th gradient");
    auto* pts_opt = verify_cmd->add_option("--points", points_file, "point-set file");
    auto* gen_opt = verify_cmd->add_option("--generators", generators_file, "generator file");
    pts_opt->excludes(gen_opt);

    auto* big_cmd = app.add_subcommand("bigraded", "Bigraded Hilbert table of a component list");
    big_cmd->add_option("components", components, "component forms")->required()->expected(-1);

    auto* ex_cmd = app.add_subcommand("paper-example", "Run a pinned worked example");
    ex_cmd->add_option("id", example_id, "example id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    set_numeric_precision_bits(precision);

    try {
        if (hf_cmd->parsed()) return run_hf(form);
        if (cat_cmd->parsed()) return run_cat(form, cat_i, i_opt->count() > 0, koszul_p);
        if (rank_cmd->parsed()) return run_rank(form, k);
        if (syl_cmd->parsed()) return run_sylvester(form, decompose);
        if (grad_cmd->parsed()) return run_gradient(form, k);
        if (verify_cmd->parsed()) {
            if (points_file.empty() && generators_file.empty()) {
                std::cerr << "verify: need --points or --generators" << std::endl;
                return kExitUsage;
            }
            return run_verify(form, gradient_k, points_file, generators_file);
        }
        if (big_cmd->parsed()) return run_bigraded(components);
        if (ex_cmd->parsed()) return run_paper_example(example_id);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << std::endl;
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitComputation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitComputation;
    }
    return kExitUsage;
}
