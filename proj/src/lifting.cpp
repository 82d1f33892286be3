#include "latcut/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latcut/error.hpp"

namespace latcut {

TranslationGroup translation_group(const SSpec& S) {
    TranslationGroup W;
    W.ambient = S.n;
    if (!S.Q) {
        for (int j = 0; j < S.n; ++j) {
            RatVec e = zero_vec(S.n);
            e[j] = 1;
            W.basis.push_back(e);
        }
        return W;
    }
    if (S.n > 2)
        fail(Err::UnsupportedS, "translation_group with Q needs n <= 2");
    // W_S = lin(conv(S)) ∩ Z^n = lin(Q) ∩ Z^n for rational nonempty S.
    std::vector<RatVec> lin = lineality_basis(*S.Q);
    if (static_cast<int>(lin.size()) == S.n) {
        for (int j = 0; j < S.n; ++j) {
            RatVec e = zero_vec(S.n);
            e[j] = 1;
            W.basis.push_back(e);
        }
    } else {
        W.basis = lin;  // primitive generators of the rational line(s)
    }
    return W;
}

namespace {

HPolyhedron normalized_K(const SFreeScene& scene) {
    return irredundant_hrep(normalize_rhs(scene.K));
}

std::vector<RatVec> spindle_lineality(const HPolyhedron& Kn) {
    std::vector<RatVec> diffs;
    for (size_t i = 1; i < Kn.rows.size(); ++i)
        diffs.push_back(sub(Kn.rows[i].a, Kn.rows[0].a));
    if (diffs.empty()) return lineality_basis(Kn);
    return kernel_basis(RatMat::from_rows(diffs));
}

Spindle build_spindle(const HPolyhedron& Kn, const RatVec& s, int facet) {
    if (facet < 0 || facet >= static_cast<int>(Kn.rows.size()))
        fail(Err::BadParams, "facet index out of range");
    if (dot(Kn.rows[facet].a, s) != 1)
        fail(Err::NotOnFacet, "a_k s != 1 for the chosen facet");
    Spindle out;
    out.s = s;
    out.facet = facet;
    out.region = HPolyhedron(Kn.dim);
    const RatVec& ak = Kn.rows[facet].a;
    for (size_t i = 0; i < Kn.rows.size(); ++i) {
        if (static_cast<int>(i) == facet) continue;
        RatVec d = sub(Kn.rows[i].a, ak);
        if (is_zero(d)) continue;
        out.region.add_row(d, Rat(0));
        out.region.add_row(scale(Rat(-1), d), Rat(-dot(d, s)));
    }
    return out;
}

// Measure of (∪ intervals + gZ) ∩ [0, g], exact.
Rat interval_covering_measure(const std::vector<std::pair<Rat, Rat>>& ivs,
                              const Rat& g) {
    std::vector<std::pair<Rat, Rat>> clipped;
    for (const auto& [lo, hi] : ivs) {
        if (hi <= lo) continue;
        Int k0 = ceil_int(Rat(Rat(0 - hi) / g));
        Int k1 = floor_int(Rat(Rat(g - lo) / g));
        for (Int k = k0; k <= k1; ++k) {
            Rat a = Rat(lo + Rat(k) * g);
            Rat b = Rat(hi + Rat(k) * g);
            if (a < 0) a = Rat(0);
            if (b > g) b = g;
            if (a < b) clipped.emplace_back(a, b);
        }
    }
    std::sort(clipped.begin(), clipped.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Rat total(0);
    Rat cursor(0);
    for (const auto& [a, b] : clipped) {
        Rat start = a > cursor ? a : cursor;
        if (b > start) {
            total += b - start;
            cursor = b;
        }
    }
    return total;
}

// 1D ball certificate: spindle intervals must cover [-eps, eps].
bool covers_ball_1d(const std::vector<Spindle>& spindles, const Rat& eps) {
    std::vector<std::pair<Rat, Rat>> ivs;
    for (const Spindle& sp : spindles) {
        CoordBounds cb = coordinate_bounds(sp.region);
        Rat lo = cb.lower[0] ? *cb.lower[0] : Rat(-eps);
        Rat hi = cb.upper[0] ? *cb.upper[0] : eps;
        if (lo < -eps) lo = Rat(-eps);
        if (hi > eps) hi = eps;
        ivs.emplace_back(Rat(lo + eps), Rat(hi + eps));
    }
    return interval_covering_measure(ivs, Rat(2) * eps) == Rat(2) * eps;
}

bool covers_ball_2d(const std::vector<Spindle>& spindles, const Rat& eps) {
    std::vector<HPolyhedron> pieces;
    for (const Spindle& sp : spindles) {
        HPolyhedron piece = sp.region;
        piece.add_row(vec({1, 0}), eps);
        piece.add_row(vec({-1, 0}), eps);
        piece.add_row(vec({0, 1}), eps);
        piece.add_row(vec({0, -1}), eps);
        if (interior_point(piece)) pieces.push_back(piece);
    }
    Rat target = Rat(4) * eps * eps;
    return polygon_union_area(pieces) == target;
}

}  // namespace

Spindle spindle(const SFreeScene& scene, const RatVec& s, int facet) {
    HPolyhedron Kn = normalized_K(scene);
    if (!Kn.contains(s)) fail(Err::BadParams, "s outside K");
    if (!scene.S.contains(s)) fail(Err::BadParams, "s outside S");
    return build_spindle(Kn, s, facet);
}

LiftingRegion lifting_region(const SFreeScene& scene) {
    SFreeScene verified = scene;
    if (!verified.verified_maximal) {
        MaximalVerdict mv = is_maximal_s_free(scene.K, scene.S, scene.window);
        if (!mv.maximal) fail(Err::NotMaximal, mv.reason);
        verified.verified_maximal = true;
        verified.certificates = mv.witnesses;
    }
    HPolyhedron Kn = normalized_K(verified);
    verified.K = Kn;

    LiftingRegion out;
    out.scene = verified;
    out.group = translation_group(verified.S);

    // Representatives of S ∩ K modulo L_K.
    std::vector<RatVec> reps;
    HPolyhedron D = Kn;
    if (verified.S.Q)
        for (const HalfSpace& h : verified.S.Q->rows) D.add_row(h.a, h.b);

    if (bounded(D)) {
        CoordBounds cb = coordinate_bounds(D);
        std::vector<long> lo(D.dim), hi(D.dim);
        for (int j = 0; j < D.dim; ++j) {
            Rat l = Rat(*cb.lower[j] - verified.S.b[j]);
            Rat h = Rat(*cb.upper[j] - verified.S.b[j]);
            if (!ceil_int(l).fits_slong_p() || !floor_int(h).fits_slong_p())
                fail(Err::WindowInsufficient, "K too large to enumerate");
            lo[j] = ceil_int(l).get_si();
            hi[j] = floor_int(h).get_si();
        }
        std::vector<RatVec> all =
            integer_points(D, IntBox(lo, hi), verified.S.b);
        // Group by the common value vector of (a_i - a_0) . s.
        std::vector<RatVec> diffs;
        for (size_t i = 1; i < Kn.rows.size(); ++i)
            diffs.push_back(sub(Kn.rows[i].a, Kn.rows[0].a));
        std::map<RatVec, RatVec, decltype(&lex_less)> groups(&lex_less);
        for (const RatVec& s : all) {
            if (verified.S.Q && !verified.S.Q->contains(s)) continue;
            RatVec key;
            for (const RatVec& d : diffs) key.push_back(dot(d, s));
            auto it = groups.find(key);
            if (it == groups.end() || lex_less(s, it->second))
                groups[key] = s;
        }
        for (const auto& [key, s] : groups) reps.push_back(s);
    } else if (Kn.dim == 2 && spindle_lineality(Kn).size() == 1) {
        // Split: certificates carry one representative per facet line.
        for (const FacetWitness& w : verified.certificates)
            reps.push_back(w.point);
    } else {
        fail(Err::WindowInsufficient,
             "cannot enumerate S ∩ K for this shape");
    }
    std::sort(reps.begin(), reps.end(), lex_less);

    for (const RatVec& s : reps) {
        for (size_t k = 0; k < Kn.rows.size(); ++k) {
            if (dot(Kn.rows[k].a, s) != 1) continue;
            out.spindles.push_back(build_spindle(Kn, s, static_cast<int>(k)));
        }
    }
    if (out.spindles.empty())
        fail(Err::BadParams, "no spindles: region undefined");

    // Certify an l-inf ball around 0 inside the union.
    out.ball_radius = Rat(0);
    Rat eps = rat(1, 2);
    for (int tries = 0; tries < 12; ++tries) {
        bool ok = Kn.dim == 1 ? covers_ball_1d(out.spindles, eps)
                              : (Kn.dim == 2 && covers_ball_2d(out.spindles, eps));
        if (ok) {
            out.ball_radius = eps;
            break;
        }
        eps = Rat(eps / 2);
    }
    if (out.ball_radius == 0)
        fail(Err::BadParams, "could not certify a ball around 0 in T(S,K)");
    return out;
}

TrivialLiftResult trivial_lifting(const MaxForm& psi, const TranslationGroup& W,
                                  const RatVec& p) {
    if (psi.rows.empty()) fail(Err::BadInput, "empty psi");
    int n = psi.dim();
    if (static_cast<int>(p.size()) != n || W.ambient != n)
        fail(Err::DimMismatch, "trivial_lifting dimensions");
    int r = W.rank();
    if (r == 0) {
        TrivialLiftResult out{eval(psi, p), zero_vec(n), IntBox({}, {})};
        return out;
    }

    // Level-set polytope in basis coordinates: psi(p + sum t_j w_j) <= m0.
    Rat m0 = eval(psi, p);
    HPolyhedron level(r);
    HPolyhedron cone(r);
    for (const RatVec& a : psi.rows) {
        RatVec row(r);
        for (int j = 0; j < r; ++j) row[j] = dot(a, W.basis[j]);
        level.add_row(row, Rat(m0 - dot(a, p)));
        cone.add_row(row, Rat(1));
    }
    // psi must be coercive along span(W): {psi <= 1} ∩ span(W) bounded.
    if (!bounded(cone))
        fail(Err::NonCoerciveDirection,
             "psi is not positive on the translation span");

    CoordBounds cb = coordinate_bounds(level);
    std::vector<long> lo(r), hi(r);
    for (int j = 0; j < r; ++j) {
        lo[j] = ceil_int(*cb.lower[j]).get_si();
        hi[j] = floor_int(*cb.upper[j]).get_si();
    }
    IntBox window(lo, hi);

    TrivialLiftResult out;
    out.value = m0;
    out.argmin_w = zero_vec(n);
    out.window_used = window;
    std::vector<long> t(lo);
    while (true) {
        RatVec w = zero_vec(n);
        for (int j = 0; j < r; ++j)
            w = add(w, scale(Rat(t[j]), W.basis[j]));
        Rat v = eval(psi, add(p, w));
        if (v < out.value) {
            out.value = v;
            out.argmin_w = w;
        }
        int j = r - 1;
        while (j >= 0 && t[j] == hi[j]) {
            t[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++t[j];
    }
    return out;
}

namespace {

struct CoveringPieces {
    std::vector<HPolyhedron> pieces;       // clipped to the cell
    std::vector<size_t> spindle_of;        // index into region.spindles
    std::vector<RatVec> shift_of;          // lattice shift applied
    HPolyhedron cell;
    Rat cell_area;
};

CoveringPieces covering_pieces(const LiftingRegion& region) {
    const TranslationGroup& W = region.group;
    RatVec w1 = W.basis[0], w2 = W.basis[1];
    RatMat Wm = RatMat::from_cols({w1, w2});
    Rat cell_area = det(Wm);
    if (cell_area < 0) cell_area = Rat(-cell_area);

    CoveringPieces out;
    out.cell_area = cell_area;
    out.cell = HPolyhedron(2);
    {
        std::vector<RatVec> corners = {zero_vec(2), w1, add(w1, w2), w2};
        RatVec center = scale(rat(1, 4),
                              add(add(corners[0], corners[1]),
                                  add(corners[2], corners[3])));
        for (size_t i = 0; i < 4; ++i) {
            RatVec e = sub(corners[(i + 1) % 4], corners[i]);
            RatVec normal = {Rat(-e[1]), e[0]};
            Rat rhs = dot(normal, corners[i]);
            if (dot(normal, center) > rhs) {
                normal = scale(Rat(-1), normal);
                rhs = Rat(-rhs);
            }
            out.cell.add_row(normal, rhs);
        }
    }
    CoordBounds cellb = coordinate_bounds(out.cell);

    for (size_t si = 0; si < region.spindles.size(); ++si) {
        const Spindle& sp = region.spindles[si];
        CoordBounds tb = coordinate_bounds(sp.region);
        for (int j = 0; j < 2; ++j)
            if (!tb.lower[j] || !tb.upper[j])
                fail(Err::BadParams, "unbounded spindle in the 2D path");
        // Shift range: w with (T + w) meeting the cell.
        RatVec wlo = {Rat(*cellb.lower[0] - *tb.upper[0]),
                      Rat(*cellb.lower[1] - *tb.upper[1])};
        RatVec whi = {Rat(*cellb.upper[0] - *tb.lower[0]),
                      Rat(*cellb.upper[1] - *tb.lower[1])};
        // k-range via the four corners of the w-box mapped through W^{-1}.
        Rat klo[2], khi[2];
        bool first = true;
        for (const Rat& x : {wlo[0], whi[0]}) {
            for (const Rat& y : {wlo[1], whi[1]}) {
                RatVec k;
                if (!solve_linear(Wm, {x, y}, k))
                    fail(Err::RankDeficient, "degenerate lattice basis");
                for (int j = 0; j < 2; ++j) {
                    if (first || k[j] < klo[j]) klo[j] = k[j];
                    if (first || k[j] > khi[j]) khi[j] = k[j];
                }
                first = false;
            }
        }
        for (long k1 = ceil_int(klo[0]).get_si();
             k1 <= floor_int(khi[0]).get_si(); ++k1) {
            for (long k2 = ceil_int(klo[1]).get_si();
                 k2 <= floor_int(khi[1]).get_si(); ++k2) {
                RatVec w = add(scale(Rat(k1), w1), scale(Rat(k2), w2));
                HPolyhedron piece(2);
                for (const HalfSpace& h : sp.region.rows)
                    piece.add_row(h.a, Rat(h.b + dot(h.a, w)));
                for (const HalfSpace& h : out.cell.rows)
                    piece.add_row(h.a, h.b);
                if (!interior_point(piece)) continue;
                out.pieces.push_back(piece);
                out.spindle_of.push_back(si);
                out.shift_of.push_back(w);
            }
        }
    }
    return out;
}

}  // namespace

Rat covering_fraction_2d(const LiftingRegion& region) {
    if (region.scene.S.n != 2)
        fail(Err::DimensionUnsupported, "covering_fraction_2d needs n=2");
    const TranslationGroup& W = region.group;
    if (W.rank() == 0) fail(Err::RankDeficient, "W_S has rank 0");

    HPolyhedron Kn = region.scene.K;
    std::vector<RatVec> lk = spindle_lineality(Kn);

    if (lk.empty()) {
        if (W.rank() == 1) return Rat(0);  // bounded union, unbounded cell
        CoveringPieces cp = covering_pieces(region);
        return Rat(polygon_union_area(cp.pieces) / cp.cell_area);
    }

    if (lk.size() == 1) {
        // Reduce along the common spindle lineality: intervals of the
        // transversal functional against the projected translation lattice.
        RatVec v = lk[0];
        RatVec c = primitive_integer_direction(rat_vec({Rat(-v[1]), v[0]}));
        Rat g(0);
        for (const RatVec& w : W.basis) g = rational_gcd(g, dot(c, w));
        if (g == 0)
            fail(Err::RankDeficient, "translations act trivially transversally");
        std::vector<std::pair<Rat, Rat>> ivs;
        for (const Spindle& sp : region.spindles) {
            LpResult mn = lp_min(c, sp.region);
            LpResult mx = lp_min(scale(Rat(-1), c), sp.region);
            if (mn.status != LpStatus::Optimal ||
                mx.status != LpStatus::Optimal)
                fail(Err::BadParams, "spindle unbounded transversally");
            ivs.emplace_back(mn.value, Rat(-mx.value));
        }
        return Rat(interval_covering_measure(ivs, g) / g);
    }
    fail(Err::RankDeficient, "spindles with full lineality");
}

PwlComplex2D lifting_complex(const LiftingRegion& region) {
    if (region.scene.S.Q)
        fail(Err::UnsupportedS, "lifting_complex expects S = b + Z^2");
    if (region.scene.S.n != 2)
        fail(Err::DimensionUnsupported, "lifting_complex needs n=2");
    if (covering_fraction_2d(region) != 1)
        fail(Err::BadParams, "lifting region does not cover: pi* is not PWL "
                             "on the whole cell");

    CoveringPieces cp = covering_pieces(region);
    PwlComplex2D out;
    std::set<std::string> seen;
    for (size_t i = 0; i < cp.pieces.size(); ++i) {
        const Spindle& sp = region.spindles[cp.spindle_of[i]];
        RatVec grad = region.scene.K.rows[sp.facet].a;
        Rat offset = Rat(-dot(grad, cp.shift_of[i]));
        std::string key = vec_to_string(grad) + "|" + rat_to_string(offset);
        for (const RatVec& v : vertex_enum(cp.pieces[i]).polytope.vertices)
            key += "|" + vec_to_string(v);
        if (!seen.insert(key).second) continue;
        out.cells.push_back({cp.pieces[i], grad, offset});
    }
    return out;
}

HPolyhedron coproduct(const HPolyhedron& K1, const HPolyhedron& K2,
                      const Rat& mu) {
    if (!(Rat(0) < mu && mu < Rat(1)))
        fail(Err::BadParams, "coproduct weight must lie strictly in (0,1)");
    for (const HPolyhedron* K : {&K1, &K2})
        if (!bounded(*K))
            fail(Err::UnboundedInput, "coproduct is defined on polytopes");
    VPolytope G1 = smallest_prepolar(K1);
    VPolytope G2 = smallest_prepolar(K2);
    HPolyhedron out(K1.dim + K2.dim);
    for (const RatVec& a1 : G1.vertices) {
        for (const RatVec& a2 : G2.vertices) {
            RatVec row;
            for (const Rat& x : a1) row.push_back(Rat(mu * x));
            for (const Rat& x : a2) row.push_back(Rat(Rat(1 - mu) * x));
            out.add_row(row, Rat(1));
        }
    }
    return out;
}

HPolyhedron pyramid_canonical(int n, const RatMat& U, const RatVec& z) {
    if (n < 2 || n > 3)
        fail(Err::DimensionUnsupported, "pyramid_canonical supports n=2,3");
    if (U.rows != n || U.cols != n || static_cast<int>(z.size()) != n)
        fail(Err::DimMismatch, "pyramid_canonical shape");
    for (const Rat& x : U.data)
        if (!is_integer(x)) fail(Err::NotUnimodular, "U must be integral");
    Rat d = det(U);
    if (d != 1 && d != -1) fail(Err::NotUnimodular, "det(U) must be +-1");
    if (!is_integral(z)) fail(Err::NotUnimodular, "shift must be integral");

    std::vector<RatVec> verts = {z};
    for (int i = 0; i < n; ++i)
        verts.push_back(add(scale(Rat(n), U.col(i)), z));
    return simplex_hrep(verts);
}

}  // namespace latcut
