// latcut: exact cut-generating-function toolkit for corner relaxations.
// JSON in, JSON/SVG out; every computation in exact rational arithmetic.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "latcut/error.hpp"
#include "latcut/json_io.hpp"
#include "latcut/svg.hpp"

namespace {

using namespace latcut;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitBudget = 3;

int exit_code_for(Err kind) {
    switch (kind) {
        case Err::BadInput:
            return kExitUsage;
        case Err::WindowInsufficient:
        case Err::BudgetExhausted:
            return kExitBudget;
        default:
            return kExitVerification;
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::BadInput, "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Err::BadInput, "invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(Err::BadInput, "cannot write '" + out_path + "'");
    out << text;
}

// Optional window radius override for scene-based commands.
void apply_window(SFreeScene& scene, std::optional<long> radius) {
    if (radius) scene.window = IntBox::cube(scene.S.n, *radius);
}

Rat b_for_pwl(const Json& j, const std::string& b_flag) {
    if (!b_flag.empty()) return rat_from_string(b_flag);
    auto it = j.find("b");
    if (it != j.end() && !it->is_null()) {
        if (it->is_array()) return rat_from_json((*it)[0]);
        return rat_from_json(*it);
    }
    fail(Err::BadInput, "no fractional point: pass --b or a \"b\" field");
}

RatVec b2_for_complex(const Json& j, const std::string& b_flag) {
    if (!b_flag.empty()) {
        std::istringstream ss(b_flag);
        std::string part;
        RatVec out;
        while (std::getline(ss, part, ',')) out.push_back(rat_from_string(part));
        return out;
    }
    auto it = j.find("b");
    if (it != j.end() && !it->is_null()) return vec_from_json(*it);
    fail(Err::BadInput, "no fractional point: pass --b or a \"b\" field");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"latcut: exact lattice-free cut generation toolkit"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    if (const char* env = std::getenv("LATCUT_SEED"))
        seed = std::strtoull(env, nullptr, 10);

    std::string scene_path, tableau_path, psi_path, points_path, pi_path,
        region_path, out_path, b_flag, type_name;
    std::optional<long> window_radius;
    long y_radius = 5, w_radius = 5;
    long max_lp_calls = 100000;

    auto* classify = app.add_subcommand("classify", "scene -> five-type tag");
    classify->add_option("--scene", scene_path)->required();
    classify->add_option("--window", window_radius);
    classify->add_option("--out", out_path);

    auto* cut = app.add_subcommand("cut", "tableau + scene -> cut JSON");
    cut->add_option("--tableau", tableau_path)->required();
    cut->add_option("--scene", scene_path)->required();
    cut->add_option("--window", window_radius);
    cut->add_option("--out", out_path);

    auto* lift = app.add_subcommand("lift", "psi + points -> pi* values");
    lift->add_option("--psi", psi_path)->required();
    lift->add_option("--points", points_path)->required();
    lift->add_option("--out", out_path);

    auto* region = app.add_subcommand("region", "scene -> lifting region");
    region->add_option("--scene", scene_path)->required();
    region->add_option("--window", window_radius);
    region->add_option("--out", out_path);

    auto* cover = app.add_subcommand("cover", "scene -> covering fraction");
    cover->add_option("--scene", scene_path)->required();
    cover->add_option("--window", window_radius);
    cover->add_option("--out", out_path);

    auto* checkmin =
        app.add_subcommand("check-minimal", "pi -> minimality report");
    checkmin->add_option("--pi", pi_path)->required();
    checkmin->add_option("--b", b_flag, "fractional point, e.g. 2/5");
    checkmin->add_option("--out", out_path);

    auto* certify = app.add_subcommand("certify-extreme",
                                       "pi -> extremality certificate");
    certify->add_option("--pi", pi_path)->required();
    certify->add_option("--b", b_flag);
    certify->add_option("--out", out_path);

    auto* render = app.add_subcommand("render", "scene or region -> SVG");
    render->add_option("--scene", scene_path);
    render->add_option("--region", region_path);
    render->add_option("--out", out_path);

    auto* makescene = app.add_subcommand(
        "make-scene", "generate a verified canonical scene of a given type");
    makescene
        ->add_option("--type", type_name,
                     "Split|Type1Triangle|Type2Triangle|Type3Triangle|"
                     "Quadrilateral")
        ->required();
    makescene->add_option("--seed", seed, "generator seed (env LATCUT_SEED)");
    makescene->add_option("--out", out_path);

    auto* validate = app.add_subcommand(
        "validate", "cut + tableau -> brute-force validity verdict");
    validate->add_option("--cut", psi_path)->required();
    validate->add_option("--tableau", tableau_path)->required();
    validate->add_option("--ybox", y_radius, "y in [0, ybox]^l");
    validate->add_option("--wbox", w_radius, "w in [-wbox, wbox]^n");
    validate->add_option("--max-lp", max_lp_calls);
    validate->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify->parsed()) {
            SFreeScene scene = scene_from_json(read_json_file(scene_path));
            apply_window(scene, window_radius);
            Class2D cls = classify_2d(scene.K, scene.S, scene.window);
            emit(dump_json(to_json(cls)), out_path);
        } else if (cut->parsed()) {
            CornerTableau t = tableau_from_json(read_json_file(tableau_path));
            SFreeScene scene = scene_from_json(read_json_file(scene_path));
            apply_window(scene, window_radius);
            Cut c = cut_from_set(t, scene);
            emit(dump_json(to_json(c)), out_path);
        } else if (lift->parsed()) {
            Json pj = read_json_file(psi_path);
            MaxForm psi = maxform_from_json(pj);
            TranslationGroup W;
            W.ambient = psi.dim();
            auto wb = pj.find("w_basis");
            if (wb != pj.end() && !wb->is_null()) {
                for (const Json& v : *wb) W.basis.push_back(vec_from_json(v));
            } else {
                for (int j = 0; j < W.ambient; ++j) {
                    RatVec e = zero_vec(W.ambient);
                    e[j] = 1;
                    W.basis.push_back(e);
                }
            }
            Json qj = read_json_file(points_path);
            const Json& arr = qj.is_array() ? qj : qj.at("points");
            Json values = Json::array();
            for (const Json& pv : arr) {
                TrivialLiftResult r = trivial_lifting(psi, W, vec_from_json(pv));
                values.push_back({{"p", pv},
                                  {"value", to_json(r.value)},
                                  {"argmin_w", to_json(r.argmin_w)},
                                  {"window", to_json(r.window_used)}});
            }
            emit(dump_json(stamp({{"values", values}})), out_path);
        } else if (region->parsed()) {
            SFreeScene scene = scene_from_json(read_json_file(scene_path));
            apply_window(scene, window_radius);
            LiftingRegion lr = lifting_region(scene);
            Json j = to_json(lr);
            if (scene.S.n == 2)
                j["covering_fraction"] = to_json(covering_fraction_2d(lr));
            emit(dump_json(j), out_path);
        } else if (cover->parsed()) {
            SFreeScene scene = scene_from_json(read_json_file(scene_path));
            apply_window(scene, window_radius);
            Rat fraction = covering_fraction_2d(lifting_region(scene));
            emit(dump_json(stamp({{"fraction", to_json(fraction)}})), out_path);
        } else if (checkmin->parsed()) {
            Json j = read_json_file(pi_path);
            if (j.contains("cells")) {
                PwlComplex2D pi = complex2d_from_json(j);
                MinimalityReport r = check_minimal(pi, b2_for_complex(j, b_flag));
                emit(dump_json(to_json(r)), out_path);
            } else {
                PwlPeriodic1D pi = pwl1d_from_json(j);
                MinimalityReport r = check_minimal(pi, b_for_pwl(j, b_flag));
                emit(dump_json(to_json(r)), out_path);
            }
        } else if (certify->parsed()) {
            Json j = read_json_file(pi_path);
            ExtremeCertificate cert;
            if (j.contains("cells")) {
                cert = certify_nplus1_hypotheses(complex2d_from_json(j),
                                                 b2_for_complex(j, b_flag));
            } else {
                cert = certify_two_slope_extreme(pwl1d_from_json(j),
                                                 b_for_pwl(j, b_flag));
            }
            emit(dump_json(to_json(cert)), out_path);
        } else if (render->parsed()) {
            if (!region_path.empty()) {
                LiftingRegion lr = region_from_json(read_json_file(region_path));
                emit(render_region_svg(lr), out_path);
            } else if (!scene_path.empty()) {
                SFreeScene scene = scene_from_json(read_json_file(scene_path));
                emit(render_scene_svg(scene), out_path);
            } else {
                fail(Err::BadInput, "render needs --scene or --region");
            }
        } else if (makescene->parsed()) {
            Class2DTag tag;
            if (type_name == "Split")
                tag = Class2DTag::Split;
            else if (type_name == "Type1Triangle")
                tag = Class2DTag::Type1Triangle;
            else if (type_name == "Type2Triangle")
                tag = Class2DTag::Type2Triangle;
            else if (type_name == "Type3Triangle")
                tag = Class2DTag::Type3Triangle;
            else if (type_name == "Quadrilateral")
                tag = Class2DTag::Quadrilateral;
            else
                fail(Err::BadInput, "unknown type '" + type_name + "'");
            CanonicalParams params;
            params.seed = seed;
            emit(dump_json(to_json(make_canonical(tag, params))), out_path);
        } else if (validate->parsed()) {
            Cut c = cut_from_json(read_json_file(psi_path));
            CornerTableau t = tableau_from_json(read_json_file(tableau_path));
            EnumBudget budget;
            budget.y_box =
                IntBox(std::vector<long>(t.int_cols.size(), 0),
                       std::vector<long>(t.int_cols.size(), y_radius));
            budget.w_box = IntBox(std::vector<long>(t.n, -w_radius),
                                  std::vector<long>(t.n, w_radius));
            budget.max_lp_calls = max_lp_calls;
            ValidityVerdict v = cut_validity_bruteforce(c, t, budget);
            emit(dump_json(to_json(v, budget)), out_path);
            if (v.kind == VerdictKind::BudgetExhausted) return kExitBudget;
        }
    } catch (const LatcutError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitOk;
}
