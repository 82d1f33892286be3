// Python bindings: the main operations over their JSON wire formats, so the
// exact rationals cross the boundary losslessly as strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latcut/error.hpp"
#include "latcut/json_io.hpp"
#include "latcut/svg.hpp"

namespace py = pybind11;
using namespace latcut;

namespace {

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        fail(Err::BadInput, std::string("invalid JSON: ") + e.what());
    }
}

std::string classify_scene(const std::string& scene_json) {
    SFreeScene scene = scene_from_json(parse(scene_json));
    return dump_json(to_json(classify_2d(scene.K, scene.S, scene.window)));
}

std::string covering_fraction(const std::string& scene_json) {
    SFreeScene scene = scene_from_json(parse(scene_json));
    Rat fraction = covering_fraction_2d(lifting_region(scene));
    return dump_json(stamp({{"fraction", to_json(fraction)}}));
}

std::string region_json(const std::string& scene_json) {
    SFreeScene scene = scene_from_json(parse(scene_json));
    LiftingRegion region = lifting_region(scene);
    Json j = to_json(region);
    if (scene.S.n == 2)
        j["covering_fraction"] = to_json(covering_fraction_2d(region));
    return dump_json(j);
}

std::string make_cut(const std::string& tableau_json,
                     const std::string& scene_json) {
    CornerTableau t = tableau_from_json(parse(tableau_json));
    SFreeScene scene = scene_from_json(parse(scene_json));
    return dump_json(to_json(cut_from_set(t, scene)));
}

std::string check_minimal_json(const std::string& pi_json,
                               const std::string& b) {
    Json j = parse(pi_json);
    if (j.contains("cells")) {
        RatVec bv = b.empty() ? vec_from_json(j.at("b"))
                              : vec_from_json(parse(b));
        return dump_json(to_json(check_minimal(complex2d_from_json(j), bv)));
    }
    Rat bq = b.empty() ? rat_from_json(j.at("b")) : rat_from_string(b);
    return dump_json(to_json(check_minimal(pwl1d_from_json(j), bq)));
}

std::string certify_extreme_json(const std::string& pi_json,
                                 const std::string& b) {
    Json j = parse(pi_json);
    if (j.contains("cells")) {
        RatVec bv = b.empty() ? vec_from_json(j.at("b"))
                              : vec_from_json(parse(b));
        return dump_json(
            to_json(certify_nplus1_hypotheses(complex2d_from_json(j), bv)));
    }
    Rat bq = b.empty() ? rat_from_json(j.at("b")) : rat_from_string(b);
    return dump_json(
        to_json(certify_two_slope_extreme(pwl1d_from_json(j), bq)));
}

std::string gmi_json(const std::string& f) {
    auto [psi, pi] = gmi_split_1d(rat_from_string(f));
    Json out = {{"psi", to_json(psi)}, {"pi", to_json(pi)}};
    return dump_json(stamp(out));
}

std::string trivial_lift_json(const std::string& psi_json,
                              const std::string& points_json) {
    Json pj = parse(psi_json);
    MaxForm psi = maxform_from_json(pj);
    TranslationGroup W;
    W.ambient = psi.dim();
    if (pj.contains("w_basis") && !pj["w_basis"].is_null()) {
        for (const Json& v : pj["w_basis"]) W.basis.push_back(vec_from_json(v));
    } else {
        for (int j = 0; j < W.ambient; ++j) {
            RatVec e = zero_vec(W.ambient);
            e[j] = 1;
            W.basis.push_back(e);
        }
    }
    Json pts = parse(points_json);
    const Json& arr = pts.is_array() ? pts : pts.at("points");
    Json values = Json::array();
    for (const Json& pv : arr) {
        TrivialLiftResult r = trivial_lifting(psi, W, vec_from_json(pv));
        values.push_back({{"p", pv},
                          {"value", to_json(r.value)},
                          {"argmin_w", to_json(r.argmin_w)}});
    }
    return dump_json(stamp({{"values", values}}));
}

std::string canonical_scene(const std::string& kind, uint64_t seed) {
    Class2DTag tag;
    if (kind == "Split")
        tag = Class2DTag::Split;
    else if (kind == "Type1Triangle")
        tag = Class2DTag::Type1Triangle;
    else if (kind == "Type2Triangle")
        tag = Class2DTag::Type2Triangle;
    else if (kind == "Type3Triangle")
        tag = Class2DTag::Type3Triangle;
    else if (kind == "Quadrilateral")
        tag = Class2DTag::Quadrilateral;
    else
        fail(Err::BadInput, "unknown scene type '" + kind + "'");
    CanonicalParams params;
    params.seed = seed;
    return dump_json(to_json(make_canonical(tag, params)));
}

std::string validate_cut(const std::string& cut_json,
                         const std::string& tableau_json, long y_radius,
                         long w_radius, long max_lp_calls) {
    Cut cut = cut_from_json(parse(cut_json));
    CornerTableau t = tableau_from_json(parse(tableau_json));
    EnumBudget budget;
    budget.y_box = IntBox(std::vector<long>(t.int_cols.size(), 0),
                          std::vector<long>(t.int_cols.size(), y_radius));
    budget.w_box = IntBox(std::vector<long>(t.n, -w_radius),
                          std::vector<long>(t.n, w_radius));
    budget.max_lp_calls = max_lp_calls;
    return dump_json(to_json(cut_validity_bruteforce(cut, t, budget), budget));
}

std::string render_svg(const std::string& object_json) {
    Json j = parse(object_json);
    if (j.contains("spindles"))
        return render_region_svg(region_from_json(j));
    return render_scene_svg(scene_from_json(j));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cut-generating-function toolkit (JSON string API)";

    py::register_exception<LatcutError>(m, "LatcutError");

    m.def("classify_scene", &classify_scene, py::arg("scene_json"),
          "Classify a maximal S-free scene into the five 2D types.");
    m.def("covering_fraction", &covering_fraction, py::arg("scene_json"),
          "Exact covering fraction of the scene's lifting region.");
    m.def("lifting_region", &region_json, py::arg("scene_json"),
          "Spindle decomposition of the lifting region, as JSON.");
    m.def("make_cut", &make_cut, py::arg("tableau_json"),
          py::arg("scene_json"),
          "Gauge + trivial-lifting cut coefficients for a corner tableau.");
    m.def("check_minimal", &check_minimal_json, py::arg("pi_json"),
          py::arg("b") = std::string(),
          "Exact minimality report for a periodic PWL function.");
    m.def("certify_extreme", &certify_extreme_json, py::arg("pi_json"),
          py::arg("b") = std::string(),
          "Two-slope / (n+1)-slope extremality certificate.");
    m.def("gmi", &gmi_json, py::arg("f"),
          "GMI pair (psi, pi) for a fractional rhs f in (0,1).");
    m.def("trivial_lift", &trivial_lift_json, py::arg("psi_json"),
          py::arg("points_json"),
          "Trivial lifting pi*(p) = min_w psi(p + w) at the given points.");
    m.def("canonical_scene", &canonical_scene, py::arg("kind"),
          py::arg("seed") = 0,
          "Verified canonical scene of the requested 2D type.");
    m.def("validate_cut", &validate_cut, py::arg("cut_json"),
          py::arg("tableau_json"), py::arg("y_radius") = 5,
          py::arg("w_radius") = 5, py::arg("max_lp_calls") = 100000,
          "Brute-force validity verdict for a cut over a tableau.");
    m.def("render_svg", &render_svg, py::arg("object_json"),
          "Deterministic SVG for a scene or lifting region.");

    m.attr("__version__") = "1.0.0";
    m.attr("schema_version") = kSchemaVersion;
}
