#include "latcut/json_io.hpp"

#include "latcut/error.hpp"

namespace latcut {

namespace {

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        fail(Err::BadInput, std::string("missing field '") + name + "'");
    return *it;
}

long long_field(const Json& j) {
    if (!j.is_number_integer()) fail(Err::BadInput, "expected an integer");
    return j.get<long>();
}

}  // namespace

Json stamp(Json j) {
    j["latcut_schema"] = kSchemaVersion;
    return j;
}

void check_schema(const Json& j) {
    auto it = j.find("latcut_schema");
    if (it != j.end() && it->get<int>() != kSchemaVersion)
        fail(Err::BadInput, "unsupported latcut_schema version");
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rat& x) { return rat_to_string(x); }

Json to_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_to_string(x));
    return out;
}

Json to_json(const HPolyhedron& P) {
    Json rows = Json::array();
    for (const HalfSpace& h : P.rows)
        rows.push_back({{"a", to_json(h.a)}, {"b", to_json(h.b)}});
    return {{"dim", P.dim}, {"rows", rows}};
}

Json to_json(const VPolytope& V) {
    Json verts = Json::array();
    for (const RatVec& v : V.vertices) verts.push_back(to_json(v));
    return {{"vertices", verts}};
}

Json to_json(const IntBox& box) {
    return {{"lower", box.lower}, {"upper", box.upper}};
}

Json to_json(const SSpec& S) {
    Json out = {{"n", S.n}, {"b", to_json(S.b)}};
    out["Q"] = S.Q ? to_json(*S.Q) : Json(nullptr);
    return out;
}

Json to_json(const SFreeScene& scene) {
    Json certs = Json::array();
    for (const FacetWitness& w : scene.certificates)
        certs.push_back({{"facet", w.facet}, {"point", to_json(w.point)}});
    return stamp({{"S", to_json(scene.S)},
                  {"K", to_json(scene.K)},
                  {"window", to_json(scene.window)},
                  {"verified_maximal", scene.verified_maximal},
                  {"certificates", certs}});
}

Json to_json(const MaxForm& f) {
    Json rows = Json::array();
    for (const RatVec& a : f.rows) rows.push_back(to_json(a));
    return stamp({{"rows", rows}, {"include_zero_term", f.include_zero_term}});
}

Json to_json(const CornerTableau& t) {
    Json cont = Json::array(), integer = Json::array();
    for (const RatVec& c : t.cont_cols) cont.push_back(to_json(c));
    for (const RatVec& c : t.int_cols) integer.push_back(to_json(c));
    return stamp(
        {{"n", t.n}, {"b", to_json(t.b)}, {"cont", cont}, {"int", integer}});
}

Json to_json(const Cut& cut) {
    return stamp({{"s_coeffs", to_json(cut.s_coeffs)},
                  {"y_coeffs", to_json(cut.y_coeffs)},
                  {"rhs", "1"}});
}

Json to_json(const PwlPeriodic1D& pi) {
    return stamp({{"breakpoints", to_json(pi.breakpoints)},
                  {"values", to_json(pi.values)}});
}

Json to_json(const PwlComplex2D& pi) {
    Json cells = Json::array();
    for (const AffineCell2& c : pi.cells)
        cells.push_back({{"cell", to_json(c.cell)},
                         {"gradient", to_json(c.gradient)},
                         {"offset", to_json(c.offset)}});
    return stamp({{"n", 2}, {"cells", cells}});
}

Json to_json(const MinimalityReport& report) {
    Json out = {{"zero_on_lattice", report.zero_on_lattice},
                {"subadditive", report.subadditive},
                {"symmetric", report.symmetric},
                {"minimal", report.minimal}};
    if (report.subadditivity_violation) {
        out["subadditivity_violation"] = {
            {"x", to_json(report.subadditivity_violation->x)},
            {"y", to_json(report.subadditivity_violation->y)},
            {"delta", to_json(report.subadditivity_violation->violation)}};
    } else {
        out["subadditivity_violation"] = nullptr;
    }
    out["symmetry_violation"] = report.symmetry_violation
                                    ? to_json(*report.symmetry_violation)
                                    : Json(nullptr);
    return stamp(out);
}

Json to_json(const Class2D& cls) {
    Json witnesses = Json::array();
    for (const FacetWitness& w : cls.witnesses)
        witnesses.push_back({{"facet", w.facet}, {"point", to_json(w.point)}});
    Json out = {{"tag", class2d_name(cls.tag)}, {"witnesses", witnesses}};
    if (cls.unimodular_map) {
        Json rows = Json::array();
        for (int r = 0; r < cls.unimodular_map->rows; ++r)
            rows.push_back(to_json(cls.unimodular_map->row(r)));
        out["unimodular_map"] = rows;
    } else {
        out["unimodular_map"] = nullptr;
    }
    return stamp(out);
}

Json to_json(const TranslationGroup& W) {
    Json basis = Json::array();
    for (const RatVec& w : W.basis) basis.push_back(to_json(w));
    return {{"ambient", W.ambient}, {"basis", basis}};
}

Json to_json(const LiftingRegion& region) {
    Json spindles = Json::array();
    for (const Spindle& sp : region.spindles)
        spindles.push_back({{"region", to_json(sp.region)},
                            {"s", to_json(sp.s)},
                            {"facet", sp.facet}});
    return stamp({{"spindles", spindles},
                  {"w", to_json(region.group)},
                  {"ball_radius", to_json(region.ball_radius)},
                  {"scene", to_json(region.scene)}});
}

Json to_json(const ExtremeCertificate& cert) {
    return stamp({{"extreme", cert.extreme},
                  {"slope_count", cert.slope_count},
                  {"failed_hypotheses", cert.failed_hypotheses},
                  {"minimality", to_json(cert.minimality)}});
}

Json to_json(const ValidityVerdict& verdict, const EnumBudget& budget) {
    const char* kind = nullptr;
    switch (verdict.kind) {
        case VerdictKind::ValidWithinBudget: kind = "ValidWithinBudget"; break;
        case VerdictKind::Violated: kind = "Violated"; break;
        case VerdictKind::BudgetExhausted: kind = "BudgetExhausted"; break;
    }
    Json out = {{"verdict", kind},
                {"lp_calls", verdict.lp_calls},
                {"budget",
                 {{"y_box", to_json(budget.y_box)},
                  {"w_box", to_json(budget.w_box)},
                  {"max_lp_calls", budget.max_lp_calls}}}};
    if (verdict.violation) {
        out["violation"] = {{"s", to_json(verdict.violation->s)},
                            {"y", verdict.violation->y},
                            {"w", verdict.violation->w},
                            {"lhs", to_json(verdict.violation->lhs)}};
    } else {
        out["violation"] = nullptr;
    }
    return stamp(out);
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rat(j.get<long>());
    if (!j.is_string()) fail(Err::BadInput, "rational must be a string");
    return rat_from_string(j.get<std::string>());
}

RatVec vec_from_json(const Json& j) {
    if (!j.is_array()) fail(Err::BadInput, "vector must be an array");
    RatVec out;
    for (const Json& x : j) out.push_back(rat_from_json(x));
    return out;
}

HPolyhedron polyhedron_from_json(const Json& j) {
    HPolyhedron P(field(j, "dim").get<int>());
    for (const Json& row : field(j, "rows"))
        P.add_row(vec_from_json(field(row, "a")),
                  rat_from_json(field(row, "b")));
    return P;
}

IntBox intbox_from_json(const Json& j) {
    std::vector<long> lo, hi;
    for (const Json& x : field(j, "lower")) lo.push_back(long_field(x));
    for (const Json& x : field(j, "upper")) hi.push_back(long_field(x));
    return IntBox(lo, hi);
}

SSpec sspec_from_json(const Json& j) {
    int n = field(j, "n").get<int>();
    RatVec b = vec_from_json(field(j, "b"));
    std::optional<HPolyhedron> Q;
    auto it = j.find("Q");
    if (it != j.end() && !it->is_null()) Q = polyhedron_from_json(*it);
    return make_sspec(n, b, Q);
}

SFreeScene scene_from_json(const Json& j) {
    check_schema(j);
    SFreeScene scene;
    scene.S = sspec_from_json(field(j, "S"));
    scene.K = polyhedron_from_json(field(j, "K"));
    scene.window = j.contains("window") && !j["window"].is_null()
                       ? intbox_from_json(j["window"])
                       : IntBox::cube(scene.S.n, 10);
    // Verification state never round-trips: it is re-established locally.
    return scene;
}

MaxForm maxform_from_json(const Json& j) {
    check_schema(j);
    MaxForm f;
    for (const Json& row : field(j, "rows")) f.rows.push_back(vec_from_json(row));
    auto it = j.find("include_zero_term");
    f.include_zero_term = it != j.end() && it->get<bool>();
    return f;
}

CornerTableau tableau_from_json(const Json& j) {
    check_schema(j);
    CornerTableau t;
    t.n = field(j, "n").get<int>();
    t.b = vec_from_json(field(j, "b"));
    for (const Json& c : field(j, "cont"))
        t.cont_cols.push_back(vec_from_json(c));
    for (const Json& c : field(j, "int"))
        t.int_cols.push_back(vec_from_json(c));
    if (static_cast<int>(t.b.size()) != t.n)
        fail(Err::BadInput, "tableau b has wrong length");
    for (const RatVec& c : t.cont_cols)
        if (static_cast<int>(c.size()) != t.n)
            fail(Err::BadInput, "continuous column has wrong length");
    for (const RatVec& c : t.int_cols)
        if (static_cast<int>(c.size()) != t.n)
            fail(Err::BadInput, "integer column has wrong length");
    return t;
}

Cut cut_from_json(const Json& j) {
    check_schema(j);
    Cut cut;
    cut.s_coeffs = vec_from_json(field(j, "s_coeffs"));
    cut.y_coeffs = vec_from_json(field(j, "y_coeffs"));
    return cut;
}

PwlPeriodic1D pwl1d_from_json(const Json& j) {
    check_schema(j);
    return make_pwl1d(vec_from_json(field(j, "breakpoints")),
                      vec_from_json(field(j, "values")));
}

PwlComplex2D complex2d_from_json(const Json& j) {
    check_schema(j);
    PwlComplex2D pi;
    for (const Json& c : field(j, "cells"))
        pi.cells.push_back({polyhedron_from_json(field(c, "cell")),
                            vec_from_json(field(c, "gradient")),
                            rat_from_json(field(c, "offset"))});
    return pi;
}

LiftingRegion region_from_json(const Json& j) {
    check_schema(j);
    LiftingRegion region;
    region.scene = scene_from_json(field(j, "scene"));
    const Json& w = field(j, "w");
    region.group.ambient = field(w, "ambient").get<int>();
    for (const Json& v : field(w, "basis"))
        region.group.basis.push_back(vec_from_json(v));
    region.ball_radius = rat_from_json(field(j, "ball_radius"));
    for (const Json& sp : field(j, "spindles"))
        region.spindles.push_back({polyhedron_from_json(field(sp, "region")),
                                   vec_from_json(field(sp, "s")),
                                   field(sp, "facet").get<int>()});
    return region;
}

EnumBudget budget_from_json(const Json& j) {
    EnumBudget budget;
    budget.y_box = intbox_from_json(field(j, "y_box"));
    budget.w_box = intbox_from_json(field(j, "w_box"));
    auto it = j.find("max_lp_calls");
    if (it != j.end()) budget.max_lp_calls = it->get<long>();
    return budget;
}

}  // namespace latcut
