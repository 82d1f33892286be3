#include "latcut/cgf.hpp"

#include "latcut/error.hpp"
#include "latcut/lifting.hpp"

namespace latcut {

MaxForm gauge_from_polyhedron(const HPolyhedron& K) {
    HPolyhedron canon = irredundant_hrep(normalize_rhs(K));

    // Gauge semantics require int(rec(K)) empty: a direction with a_i d < 0
    // for every row would make the max formula negative somewhere.
    HPolyhedron cone(K.dim + 1);
    for (const HalfSpace& h : canon.rows) {
        RatVec a = h.a;
        a.push_back(Rat(1));
        cone.add_row(a, Rat(0));  // a_i d + t <= 0
    }
    RatVec box = zero_vec(K.dim + 1);
    box[K.dim] = 1;
    cone.add_row(box, Rat(1));  // t <= 1
    RatVec obj = zero_vec(K.dim + 1);
    obj[K.dim] = -1;
    LpResult r = lp_solve(obj, cone);
    if (r.status == LpStatus::Optimal && Rat(-r.value) > 0)
        fail(Err::FullDimRecession,
             "rec(K) is full-dimensional; use smallest_representation");

    MaxForm out;
    out.include_zero_term = false;
    for (const HalfSpace& h : canon.rows) out.rows.push_back(h.a);
    return out;
}

MaxForm smallest_representation(const HPolyhedron& K) {
    VPolytope prepolar = smallest_prepolar(K);
    MaxForm out;
    out.include_zero_term = false;
    out.rows = prepolar.vertices;
    return out;
}

CornerTableau corner_from_tableau(const SimplexTableau& t) {
    CornerTableau out;
    std::vector<const TableauRow*> kept;
    bool fractional = false;
    for (const TableauRow& row : t.rows) {
        if (row.coeffs.size() != t.columns.size())
            fail(Err::DimMismatch, "tableau row width");
        if (!row.basic_is_integer) continue;  // the equation is dropped
        kept.push_back(&row);
        if (!is_integer(row.rhs)) fractional = true;
    }
    if (kept.empty() || !fractional)
        fail(Err::AllRhsIntegral,
             "no fractional integer basic row: nothing to separate");

    out.n = static_cast<int>(kept.size());
    for (const TableauRow* row : kept) out.b.push_back(row->rhs);
    for (size_t c = 0; c < t.columns.size(); ++c) {
        RatVec col;
        for (const TableauRow* row : kept) col.push_back(row->coeffs[c]);
        if (t.columns[c].is_integer)
            out.int_cols.push_back(col);
        else
            out.cont_cols.push_back(col);
    }
    return out;
}

Cut cut_from_set(const CornerTableau& t, const SFreeScene& scene) {
    if (scene.S.n != t.n) fail(Err::DimMismatch, "tableau/scene dimensions");
    if (scene.S.Q)
        fail(Err::UnsupportedS, "cut_from_set expects S = b + Z^n");
    if (!is_integral(sub(scene.S.b, t.b)))
        fail(Err::BadParams,
             "scene lattice b does not match the tableau rhs modulo Z^n");
    MaximalVerdict mv = is_maximal_s_free(scene.K, scene.S, scene.window);
    if (!mv.maximal) fail(Err::NotMaximal, mv.reason);

    MaxForm psi = gauge_from_polyhedron(scene.K);
    Cut cut;
    for (const RatVec& r : t.cont_cols) cut.s_coeffs.push_back(eval(psi, r));
    if (!t.int_cols.empty()) {
        TranslationGroup W = translation_group(scene.S);
        for (const RatVec& p : t.int_cols)
            cut.y_coeffs.push_back(trivial_lifting(psi, W, p).value);
    }
    return cut;
}

std::pair<MaxForm, PwlPeriodic1D> gmi_split_1d(const Rat& f) {
    if (!(Rat(0) < f && f < Rat(1)))
        fail(Err::BadFraction, "gmi fraction must lie in (0,1)");
    MaxForm psi;
    psi.rows = {RatVec{Rat(Rat(1) / f)}, RatVec{Rat(Rat(-1) / Rat(1 - f))}};
    PwlPeriodic1D pi = make_pwl1d({Rat(0), f}, {Rat(0), Rat(1)});
    return {psi, pi};
}

}  // namespace latcut
