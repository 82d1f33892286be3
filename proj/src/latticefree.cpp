#include "latcut/latticefree.hpp"

#include <algorithm>
#include <random>

#include "latcut/error.hpp"

namespace latcut {

namespace {

void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
}

// For primitive integer v in Z^2, a unimodular matrix with columns (u, v).
RatMat unimodular_with_second_column(const RatVec& v) {
    Int p(v[0].get_num()), q(v[1].get_num());
    Int g, x, y;
    ext_gcd(p, q, g, x, y);
    if (g != 1 && g != -1) fail(Err::BadParams, "direction not primitive");
    // det [u v] = u1 q - u2 p = 1 with u = (y, -x) when g = 1.
    Rat sign = g == 1 ? Rat(1) : Rat(-1);
    RatMat V(2, 2);
    V.at(0, 0) = Rat(sign * Rat(y));
    V.at(1, 0) = Rat(sign * Rat(-x));
    V.at(0, 1) = v[0];
    V.at(1, 1) = v[1];
    return V;
}

struct OrientedRow {
    RatVec a;
    Rat b;
    bool strict;  // strict for int(K) rows, closed for Q rows
};

// Nonzero rows of K (strict) and Q (closed); zero rows are resolved
// immediately: an infeasible zero row empties the respective set.
struct EffectiveRows {
    std::vector<OrientedRow> rows;
    bool k_empty = false;
    bool q_empty = false;
};

EffectiveRows collect_rows(const HPolyhedron& K, const SSpec& S) {
    EffectiveRows out;
    for (const HalfSpace& h : K.rows) {
        if (is_zero(h.a)) {
            if (h.b <= 0) out.k_empty = true;  // int(K) empty when b <= 0
            continue;
        }
        out.rows.push_back({h.a, h.b, true});
    }
    if (S.Q) {
        for (const HalfSpace& h : S.Q->rows) {
            if (is_zero(h.a)) {
                if (h.b < 0) out.q_empty = true;
                continue;
            }
            out.rows.push_back({h.a, h.b, false});
        }
    }
    return out;
}

std::vector<RatVec> row_normals(const std::vector<OrientedRow>& rows) {
    std::vector<RatVec> normals;
    for (const OrientedRow& r : rows) normals.push_back(r.a);
    return normals;
}

// Closed relaxation of a row system, for coordinate bounds.
HPolyhedron closed_hull(int dim, const std::vector<OrientedRow>& rows) {
    HPolyhedron P(dim);
    for (const OrientedRow& r : rows) P.add_row(r.a, r.b);
    return P;
}

bool satisfies(const OrientedRow& r, const RatVec& x) {
    Rat v = dot(r.a, x);
    return r.strict ? v < r.b : v <= r.b;
}

bool satisfies_all(const std::vector<OrientedRow>& rows, const RatVec& x) {
    for (const OrientedRow& r : rows)
        if (!satisfies(r, x)) return false;
    return true;
}

// Exact integer ranges for z with b + z inside the closed hull; fails with
// WindowInsufficient when the hull is unbounded or exceeds the window.
struct ZRange {
    std::vector<long> lo;
    std::vector<long> hi;
    bool empty = false;
};

long to_long(const Int& v) {
    if (!v.fits_slong_p()) fail(Err::WindowInsufficient, "range too large");
    return v.get_si();
}

ZRange z_range_for(const HPolyhedron& closed, const RatVec& b,
                   const IntBox& window, bool respect_window) {
    CoordBounds cb = coordinate_bounds(closed);
    ZRange out;
    for (int j = 0; j < closed.dim; ++j) {
        if (!cb.lower[j] || !cb.upper[j])
            fail(Err::WindowInsufficient,
                 "unbounded region cannot be enumerated");
        long lo = to_long(ceil_int(Rat(*cb.lower[j] - b[j])));
        long hi = to_long(floor_int(Rat(*cb.upper[j] - b[j])));
        if (lo > hi) out.empty = true;
        if (respect_window) {
            if (lo < window.lower[j] || hi > window.upper[j])
                fail(Err::WindowInsufficient,
                     "window does not cover the bounded part");
        }
        out.lo.push_back(lo);
        out.hi.push_back(hi);
    }
    return out;
}

template <typename Fn>
void for_each_z(const ZRange& range, Fn&& fn) {
    if (range.empty) return;
    int n = static_cast<int>(range.lo.size());
    std::vector<long> z(range.lo);
    while (true) {
        if (!fn(z)) return;
        int j = n - 1;
        while (j >= 0 && z[j] == range.hi[j]) {
            z[j] = range.lo[j];
            --j;
        }
        if (j < 0) return;
        ++z[j];
    }
}

RatVec lattice_point(const RatVec& b, const std::vector<long>& z) {
    RatVec x(b.size());
    for (size_t j = 0; j < b.size(); ++j) x[j] = Rat(b[j] + Rat(z[j]));
    return x;
}

// Bound on integer m from  coeff * m (<|<=) rhs  relative to value offset:
// returns the admissible interval pieces for the 1-dimensional reductions.
struct IntInterval {
    bool has_lo = false, has_hi = false;
    Int lo, hi;
    bool empty = false;

    void add_upper(const Rat& bound, bool strict) {
        Int m = strict ? (is_integer(bound) ? Int(bound.get_num() - 1)
                                            : floor_int(bound))
                       : floor_int(bound);
        if (!has_hi || m < hi) {
            has_hi = true;
            hi = m;
        }
    }
    void add_lower(const Rat& bound, bool strict) {
        Int m = strict ? (is_integer(bound) ? Int(bound.get_num() + 1)
                                            : ceil_int(bound))
                       : ceil_int(bound);
        if (!has_lo || m > lo) {
            has_lo = true;
            lo = m;
        }
    }
    bool feasible() const {
        if (empty) return false;
        return !(has_lo && has_hi && lo > hi);
    }
    // Deterministic representative: the admissible integer closest to 0.
    Int pick() const {
        Int m(0);
        if (has_lo && m < lo) m = lo;
        if (has_hi && m > hi) m = hi;
        return m;
    }
};

// Constrains integer parameter k along x(k) = base + k * step by every row.
IntInterval interval_along_line(const std::vector<OrientedRow>& rows,
                                const RatVec& base, const RatVec& step) {
    IntInterval iv;
    for (const OrientedRow& r : rows) {
        Rat coeff = dot(r.a, step);
        Rat rhs = Rat(r.b - dot(r.a, base));
        if (coeff == 0) {
            if (r.strict ? !(Rat(0) < rhs) : !(Rat(0) <= rhs)) iv.empty = true;
        } else if (coeff > 0) {
            iv.add_upper(Rat(rhs / coeff), r.strict);
        } else {
            iv.add_lower(Rat(rhs / coeff), r.strict);
        }
    }
    return iv;
}

// S-points on the affine line {x : a.x == beta} (2D) as base + k*step, k in Z.
struct LinePoints {
    bool any = false;
    RatVec base;  // one S-point on the line
    RatVec step;  // primitive lattice direction along the line
};

LinePoints s_points_on_line(const RatVec& a, const Rat& beta, const RatVec& b) {
    LinePoints out;
    RatVec prim = primitive_integer_direction(a);
    int k = 0;
    while (a[k] == 0) ++k;
    Rat scale_factor = Rat(prim[k] / a[k]);
    Rat beta_prim = Rat(scale_factor * beta);
    Rat mu = Rat(beta_prim - dot(prim, b));
    if (!is_integer(mu)) return out;  // no lattice translate meets the line
    Int g, xg, yg;
    ext_gcd(Int(prim[0].get_num()), Int(prim[1].get_num()), g, xg, yg);
    // prim is primitive, so g = +-1.
    Rat sign = g == 1 ? Rat(1) : Rat(-1);
    RatVec z0 = {Rat(sign * Rat(xg) * Rat(mu)), Rat(sign * Rat(yg) * Rat(mu))};
    out.any = true;
    out.base = add(b, z0);
    out.step = {Rat(-prim[1]), prim[0]};
    return out;
}

}  // namespace

bool SSpec::contains(const RatVec& x) const {
    if (static_cast<int>(x.size()) != n) fail(Err::DimMismatch, "SSpec point");
    if (!is_integral(sub(x, b))) return false;
    return !Q || Q->contains(x);
}

SSpec make_sspec(int n, const RatVec& b, const std::optional<HPolyhedron>& Q,
                 const IntBox* nonempty_window) {
    if (static_cast<int>(b.size()) != n) fail(Err::DimMismatch, "SSpec b size");
    if (Q && Q->dim != n) fail(Err::DimMismatch, "SSpec Q dimension");
    SSpec S{n, b, Q};
    if (is_integral(b)) {
        // 0 would lie in b + Z^n; Q must exclude it.
        if (!Q || Q->contains(zero_vec(n)))
            fail(Err::BadParams, "0 lies in S");
    }
    if (Q && nonempty_window) {
        bool found = false;
        for_each_z(ZRange{nonempty_window->lower, nonempty_window->upper, false},
                   [&](const std::vector<long>& z) {
                       if (Q->contains(lattice_point(b, z))) {
                           found = true;
                           return false;
                       }
                       return true;
                   });
        if (!found)
            fail(Err::BadParams, "S empty within the verification window");
    }
    return S;
}

SFreeVerdict is_s_free(const HPolyhedron& K, const SSpec& S,
                       const IntBox& window) {
    if (K.dim != S.n || window.dim() != S.n)
        fail(Err::DimMismatch, "is_s_free dimensions");

    EffectiveRows eff = collect_rows(K, S);
    if (eff.k_empty || eff.q_empty) return {true, std::nullopt};

    // Lineality of K alone drives the reduction: membership of b + z in
    // int(K) is invariant along it, and Q only filters the candidates.
    std::vector<RatVec> k_normals;
    for (const OrientedRow& r : eff.rows)
        if (r.strict) k_normals.push_back(r.a);
    std::vector<RatVec> all_normals = row_normals(eff.rows);
    int k_lineality =
        k_normals.empty() ? S.n : S.n - rank(RatMat::from_rows(k_normals));
    int lineality_rank =
        all_normals.empty() ? S.n : S.n - rank(RatMat::from_rows(all_normals));

    if (lineality_rank == 0 && bounded(closed_hull(S.n, eff.rows))) {
        ZRange range =
            z_range_for(closed_hull(S.n, eff.rows), S.b, window, true);
        SFreeVerdict verdict{true, std::nullopt};
        for_each_z(range, [&](const std::vector<long>& z) {
            RatVec x = lattice_point(S.b, z);
            if (satisfies_all(eff.rows, x)) {
                verdict = {false, x};
                return false;
            }
            return true;
        });
        return verdict;
    }

    if (S.n == 2 && k_lineality == 1) {
        // K is a strip (its normals are parallel): the interior test fixes
        // one integer m = n0.(b+z) - n0.b per lattice line; Q then filters
        // each line exactly. Completeness needs no window.
        RatVec n0 = primitive_integer_direction(k_normals[0]);
        IntInterval iv;
        for (const OrientedRow& r : eff.rows) {
            if (!r.strict) continue;
            int k = 0;
            while (n0[k] == 0) ++k;
            Rat lambda = Rat(r.a[k] / n0[k]);
            Rat bound = Rat(Rat(r.b / lambda) - dot(n0, S.b));
            if (lambda > 0)
                iv.add_upper(bound, r.strict);
            else
                iv.add_lower(bound, r.strict);
        }
        if (!iv.feasible()) return {true, std::nullopt};

        std::vector<OrientedRow> q_rows;
        for (const OrientedRow& r : eff.rows)
            if (!r.strict) q_rows.push_back(r);

        if (q_rows.empty()) {
            Int m = iv.pick();
            Int g, xg, yg;
            ext_gcd(Int(n0[0].get_num()), Int(n0[1].get_num()), g, xg, yg);
            Rat sign = g == 1 ? Rat(1) : Rat(-1);
            RatVec z0 = {Rat(sign * Rat(xg) * Rat(m)),
                         Rat(sign * Rat(yg) * Rat(m))};
            // Reduce along the strip direction to keep the witness small.
            RatVec v = {Rat(-n0[1]), n0[0]};
            Rat proj = Rat(dot(z0, v) / dot(v, v));
            Int shift = floor_int(Rat(proj + rat(1, 2)));
            RatVec z = sub(z0, scale(Rat(shift), v));
            return {false, add(S.b, z)};
        }

        if (!iv.has_lo || !iv.has_hi)
            fail(Err::WindowInsufficient,
                 "half-plane K with Q cannot be enumerated");
        for (Int m = iv.lo; m <= iv.hi; ++m) {
            Rat beta = Rat(dot(n0, S.b) + Rat(m));
            LinePoints lp = s_points_on_line(n0, beta, S.b);
            if (!lp.any) continue;
            IntInterval online = interval_along_line(q_rows, lp.base, lp.step);
            if (!online.feasible()) continue;
            return {false, add(lp.base, scale(Rat(online.pick()), lp.step))};
        }
        return {true, std::nullopt};
    }

    if (lineality_rank == S.n) {
        // No effective rows: int(K) is the whole space.
        if (!S.Q) return {false, S.b};
        SFreeVerdict verdict{true, std::nullopt};
        bool found = false;
        for_each_z(ZRange{window.lower, window.upper, false},
                   [&](const std::vector<long>& z) {
                       RatVec x = lattice_point(S.b, z);
                       if (S.contains(x)) {
                           verdict = {false, x};
                           found = true;
                           return false;
                       }
                       return true;
                   });
        if (!found)
            fail(Err::WindowInsufficient, "no S-point found in window");
        return verdict;
    }

    fail(Err::WindowInsufficient,
         "lineality reduction unsupported in this dimension");
}

namespace {

// All S-points in the relative interior of facet `i` of the irredundant K.
// Bounded facets are enumerated completely from their own bounding box;
// line facets (splits, wedges) are solved along the lattice direction.
// max_points caps the list (0 = unlimited).
std::vector<RatVec> facet_relint_points(const HPolyhedron& Kirr, int facet,
                                        const SSpec& S, size_t max_points) {
    const HalfSpace& f = Kirr.rows[facet];
    std::vector<OrientedRow> relint_rows;
    for (int j = 0; j < static_cast<int>(Kirr.rows.size()); ++j) {
        if (j == facet) continue;
        relint_rows.push_back({Kirr.rows[j].a, Kirr.rows[j].b, true});
    }
    if (S.Q)
        for (const HalfSpace& h : S.Q->rows)
            if (!is_zero(h.a)) relint_rows.push_back({h.a, h.b, false});

    auto on_facet = [&](const RatVec& x) { return dot(f.a, x) == f.b; };

    // Closed system of the facet for ranges.
    std::vector<OrientedRow> closed_rows;
    closed_rows.push_back({f.a, f.b, false});
    closed_rows.push_back({scale(Rat(-1), f.a), Rat(-f.b), false});
    for (const OrientedRow& r : relint_rows)
        closed_rows.push_back({r.a, r.b, false});
    HPolyhedron closed = closed_hull(S.n, closed_rows);

    CoordBounds cb = coordinate_bounds(closed);
    bool facet_bounded = true;
    for (int j = 0; j < S.n; ++j)
        if (!cb.lower[j] || !cb.upper[j]) facet_bounded = false;

    std::vector<RatVec> out;
    if (facet_bounded) {
        ZRange range;
        for (int j = 0; j < S.n; ++j) {
            long lo = to_long(ceil_int(Rat(*cb.lower[j] - S.b[j])));
            long hi = to_long(floor_int(Rat(*cb.upper[j] - S.b[j])));
            if (lo > hi) range.empty = true;
            range.lo.push_back(lo);
            range.hi.push_back(hi);
        }
        for_each_z(range, [&](const std::vector<long>& z) {
            RatVec x = lattice_point(S.b, z);
            if (on_facet(x) && satisfies_all(relint_rows, x) &&
                (!S.Q || S.Q->contains(x)))
                out.push_back(x);
            return max_points == 0 || out.size() < max_points;
        });
        return out;
    }

    if (S.n != 2)
        fail(Err::WindowInsufficient, "unbounded facet beyond 2D reduction");

    LinePoints lp = s_points_on_line(f.a, f.b, S.b);
    if (!lp.any) return out;
    IntInterval iv = interval_along_line(relint_rows, lp.base, lp.step);
    if (S.Q) {
        std::vector<OrientedRow> qrows;
        for (const HalfSpace& h : S.Q->rows)
            if (!is_zero(h.a)) qrows.push_back({h.a, h.b, false});
        IntInterval qiv = interval_along_line(qrows, lp.base, lp.step);
        if (!qiv.feasible()) return out;
        if (qiv.has_lo) iv.add_lower(Rat(qiv.lo), false);
        if (qiv.has_hi) iv.add_upper(Rat(qiv.hi), false);
    }
    if (!iv.feasible()) return out;
    if (iv.has_lo && iv.has_hi) {
        for (Int k = iv.lo; k <= iv.hi; ++k) {
            out.push_back(add(lp.base, scale(Rat(k), lp.step)));
            if (max_points != 0 && out.size() >= max_points) break;
        }
        std::sort(out.begin(), out.end(), lex_less);
    } else {
        // Infinitely many relint points (split facet): report one.
        out.push_back(add(lp.base, scale(Rat(iv.pick()), lp.step)));
    }
    return out;
}

}  // namespace

MaximalVerdict is_maximal_s_free(const HPolyhedron& K, const SSpec& S,
                                 const IntBox& window) {
    MaximalVerdict out;
    SFreeVerdict sf = is_s_free(K, S, window);
    if (!sf.is_free) {
        out.interior_violation = sf.violation;
        out.reason = "int(K) contains an S-point";
        return out;
    }
    if (!feasible(K)) {
        out.reason = "K is empty";
        return out;
    }
    if (!interior_point(K)) {
        out.reason = "K is not full-dimensional";
        return out;
    }
    HPolyhedron Kirr = irredundant_hrep(K);

    // Sufficiency of the facet-witness criterion needs every direction of
    // recession of K ∩ Q to be a lineality direction of K.
    HPolyhedron D = Kirr;
    if (S.Q)
        for (const HalfSpace& h : S.Q->rows) D.add_row(h.a, h.b);
    VertexEnumResult dv = vertex_enum(D);
    for (const RatVec& ray : dv.rays) {
        for (const HalfSpace& h : Kirr.rows) {
            if (dot(h.a, ray) != 0) {
                out.reason = "recession direction outside lin(K)";
                return out;
            }
        }
    }
    if (S.Q && !interior_point(D)) {
        out.reason = "K meets conv(S) without interior";
        return out;
    }

    for (int i = 0; i < static_cast<int>(Kirr.rows.size()); ++i) {
        std::vector<RatVec> pts = facet_relint_points(Kirr, i, S, 1);
        if (pts.empty()) {
            out.reason = "facet " + std::to_string(i) +
                         " has no S-point in its relative interior";
            out.witnesses.clear();
            return out;
        }
        out.witnesses.push_back({i, pts[0]});
    }
    out.maximal = true;
    return out;
}

const char* class2d_name(Class2DTag tag) {
    switch (tag) {
        case Class2DTag::Split: return "Split";
        case Class2DTag::Type1Triangle: return "Type1Triangle";
        case Class2DTag::Type2Triangle: return "Type2Triangle";
        case Class2DTag::Type3Triangle: return "Type3Triangle";
        case Class2DTag::Quadrilateral: return "Quadrilateral";
    }
    return "?";
}

namespace {

bool vertex_in_s(const RatVec& v, const SSpec& S) {
    return is_integral(sub(v, S.b));
}

std::optional<RatMat> type1_map(const std::vector<RatVec>& verts,
                                const SSpec& S) {
    for (const RatVec& v : verts)
        if (!vertex_in_s(v, S)) return std::nullopt;
    RatVec w1 = sub(verts[1], verts[0]);
    RatVec w2 = sub(verts[2], verts[0]);
    for (const Rat& c : {w1[0], w1[1], w2[0], w2[1]}) {
        if (!is_integer(c)) return std::nullopt;
        if (!is_integer(Rat(c / 2))) return std::nullopt;
    }
    RatMat U = RatMat::from_cols({scale(rat(1, 2), w1), scale(rat(1, 2), w2)});
    Rat d = det(U);
    if (d != 1 && d != -1) return std::nullopt;
    return U;
}

}  // namespace

Class2D classify_2d(const HPolyhedron& K, const SSpec& S,
                    const IntBox& window) {
    if (S.n != 2) fail(Err::DimensionUnsupported, "classify_2d needs n=2");
    if (S.Q) fail(Err::UnsupportedS, "classify_2d requires Q absent");

    MaximalVerdict mv = is_maximal_s_free(K, S, window);
    if (!mv.maximal) fail(Err::NotMaximal, mv.reason);

    HPolyhedron Kirr = irredundant_hrep(K);
    std::vector<RatVec> lin = lineality_basis(Kirr);

    Class2D out;
    if (!lin.empty()) {
        if (Kirr.rows.size() != 2)
            fail(Err::NotClassifiable, "unbounded non-split survivor");
        out.tag = Class2DTag::Split;
        out.witnesses = mv.witnesses;
        return out;
    }

    if (!bounded(Kirr)) fail(Err::NotClassifiable, "pointed unbounded K");

    size_t facets = Kirr.rows.size();
    std::vector<std::vector<RatVec>> relint(facets);
    for (size_t i = 0; i < facets; ++i)
        relint[i] = facet_relint_points(Kirr, static_cast<int>(i), S, 0);

    if (facets == 4) {
        std::vector<RatVec> pts;
        for (size_t i = 0; i < facets; ++i) {
            if (relint[i].size() != 1)
                fail(Err::NotClassifiable,
                     "quadrilateral facet without unique S-point");
            pts.push_back(relint[i][0]);
        }
        // The four witnesses must form q, q+u, q+v, q+u+v with det(u,v)=+-1.
        std::sort(pts.begin(), pts.end(), lex_less);
        bool ppd = false;
        RatVec d1 = sub(pts[1], pts[0]);
        RatVec d2 = sub(pts[2], pts[0]);
        RatVec d3 = sub(pts[3], pts[0]);
        if (d3 == add(d1, d2)) {
            Rat dd = det(RatMat::from_cols({d1, d2}));
            ppd = (dd == 1 || dd == -1) && is_integral(d1) && is_integral(d2);
        }
        if (!ppd)
            fail(Err::NotClassifiable,
                 "facet witnesses do not span a fundamental parallelepiped");
        out.tag = Class2DTag::Quadrilateral;
        out.witnesses = mv.witnesses;
        return out;
    }

    if (facets != 3) fail(Err::NotClassifiable, "unexpected facet count");

    std::vector<RatVec> verts = vertex_enum(Kirr).polytope.vertices;
    if (verts.size() != 3) fail(Err::NotClassifiable, "triangle rows mismatch");

    if (std::optional<RatMat> U = type1_map(verts, S)) {
        out.tag = Class2DTag::Type1Triangle;
        out.witnesses = mv.witnesses;
        out.unimodular_map = U;
        return out;
    }

    std::vector<size_t> multi, single;
    for (size_t i = 0; i < 3; ++i) {
        if (relint[i].size() >= 2)
            multi.push_back(i);
        else if (relint[i].size() == 1)
            single.push_back(i);
    }
    if (multi.size() == 1 && single.size() == 2) {
        // The line through the two single witnesses must be parallel to the
        // side holding several S-points.
        RatVec through = sub(relint[single[1]][0], relint[single[0]][0]);
        const RatVec& n3 = Kirr.rows[multi[0]].a;
        if (dot(n3, through) != 0)
            fail(Err::NotClassifiable,
                 "two-point line not parallel to the multi-point side");
        out.tag = Class2DTag::Type2Triangle;
        out.witnesses = mv.witnesses;
        return out;
    }
    if (multi.empty() && single.size() == 3) {
        for (const RatVec& v : verts)
            if (vertex_in_s(v, S))
                fail(Err::NotClassifiable,
                     "triangle with an S-vertex but no unimodular map");
        out.tag = Class2DTag::Type3Triangle;
        out.witnesses = mv.witnesses;
        return out;
    }
    fail(Err::NotClassifiable, "witness pattern matches no type");
}

bool doignon_check(const HPolyhedron& K) {
    HPolyhedron Kirr = irredundant_hrep(K);
    long bound = 1L << K.dim;
    return static_cast<long>(Kirr.rows.size()) <= bound;
}

MinkowskiResult minkowski_check(const HPolyhedron& C, const IntBox& window) {
    if (C.dim < 1 || C.dim > 2)
        fail(Err::DimensionUnsupported, "minkowski_check supports n <= 2");
    if (!bounded(C)) fail(Err::NotCompact, "C must be compact");
    HPolyhedron Cirr = irredundant_hrep(C);

    // Central symmetry about 0: canonically scaled rows must pair (a,b) with
    // (-a,b).
    auto canon = [](const HalfSpace& h) {
        RatVec d = primitive_integer_direction(h.a);
        int k = 0;
        while (h.a[k] == 0) ++k;
        return std::make_pair(d, Rat(Rat(d[k] / h.a[k]) * h.b));
    };
    for (const HalfSpace& h : Cirr.rows) {
        auto [d, b] = canon(h);
        bool paired = false;
        for (const HalfSpace& g : Cirr.rows) {
            auto [d2, b2] = canon(g);
            if (d2 == scale(Rat(-1), d) && b2 == b) {
                paired = true;
                break;
            }
        }
        if (!paired) fail(Err::NotSymmetric, "C is not symmetric about 0");
    }

    MinkowskiResult out;
    if (C.dim == 2) {
        out.volume = polygon_area(Cirr);
    } else {
        CoordBounds cb = coordinate_bounds(Cirr);
        out.volume = Rat(*cb.upper[0] - *cb.lower[0]);
    }

    ZRange range = z_range_for(Cirr, zero_vec(C.dim), window, true);
    for_each_z(range, [&](const std::vector<long>& z) {
        bool nonzero = false;
        for (long v : z)
            if (v != 0) nonzero = true;
        if (!nonzero) return true;
        RatVec x = lattice_point(zero_vec(C.dim), z);
        if (Cirr.contains(x)) {
            out.found = true;
            out.point = x;
            return false;
        }
        return true;
    });
    return out;
}

HPolyhedron transform_polyhedron(const HPolyhedron& K, const RatMat& U,
                                 const RatVec& z) {
    if (U.rows != K.dim || U.cols != K.dim)
        fail(Err::DimMismatch, "transform matrix");
    Rat d = det(U);
    if (d == 0) fail(Err::BadParams, "singular transform");
    // Rows become a U^{-1}, rhs shifts by a U^{-1} z.
    HPolyhedron out(K.dim);
    for (const HalfSpace& h : K.rows) {
        RatVec anew;
        // Solve U^T y = a to get y = a U^{-1} without forming the inverse.
        RatMat Ut(U.cols, U.rows);
        for (int r = 0; r < U.rows; ++r)
            for (int c = 0; c < U.cols; ++c) Ut.at(c, r) = U.at(r, c);
        if (!solve_linear(Ut, h.a, anew)) fail(Err::BadParams, "singular");
        out.add_row(anew, Rat(h.b + dot(anew, z)));
    }
    return out;
}

RatMat random_unimodular_2d(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> shear(-2, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    RatMat U = RatMat::identity(2);
    for (int step = 0; step < 3; ++step) {
        RatMat E = RatMat::identity(2);
        if (coin(rng))
            E.at(0, 1) = shear(rng);
        else
            E.at(1, 0) = shear(rng);
        U = mat_mul(U, E);
        if (coin(rng)) {
            RatMat swap(2, 2);
            swap.at(0, 1) = 1;
            swap.at(1, 0) = 1;
            U = mat_mul(U, swap);
        }
    }
    return U;
}

namespace {

Rat rand_rat(std::mt19937_64& rng, int lo_num, int hi_num, int den) {
    std::uniform_int_distribution<int> num(lo_num, hi_num);
    return rat(num(rng), den);
}

// Triangle/quadrilateral H-rep from vertices, rows oriented inward and
// ordered by the vertex list.
HPolyhedron hull_2d(const std::vector<RatVec>& verts) {
    HPolyhedron P(2);
    size_t n = verts.size();
    RatVec center = zero_vec(2);
    for (const RatVec& v : verts) center = add(center, v);
    center = scale(Rat(1, static_cast<long>(n)), center);
    for (size_t i = 0; i < n; ++i) {
        RatVec d = sub(verts[(i + 1) % n], verts[i]);
        RatVec normal = {Rat(-d[1]), d[0]};
        Rat rhs = dot(normal, verts[i]);
        if (dot(normal, center) > rhs) {
            normal = scale(Rat(-1), normal);
            rhs = Rat(-rhs);
        }
        P.add_row(normal, rhs);
    }
    return P;
}

// Window large enough to enumerate the recentred K (lower bound 10).
IntBox window_for(const HPolyhedron& K) {
    long radius = 10;
    if (bounded(K)) {
        CoordBounds cb = coordinate_bounds(K);
        for (int j = 0; j < K.dim; ++j) {
            Int lo = floor_int(*cb.lower[j]);
            Int hi = ceil_int(*cb.upper[j]);
            if (-lo + 2 > radius) radius = to_long(Int(-lo + 2));
            if (hi + 2 > radius) radius = to_long(Int(hi + 2));
        }
    }
    return IntBox::cube(K.dim, radius);
}

// Recentres a Z^2-maximal-free K0 at interior point q: the scene carries
// K = K0 - q with S = frac(-q) + Z^2, so 0 lands in int(K).
SFreeScene recentre(const HPolyhedron& K0, const RatVec& q) {
    HPolyhedron K(2);
    for (const HalfSpace& h : K0.rows)
        K.add_row(h.a, Rat(h.b - dot(h.a, q)));
    RatVec b = {frac(Rat(-q[0])), frac(Rat(-q[1]))};
    SFreeScene scene;
    scene.S = make_sspec(2, b);
    scene.K = irredundant_hrep(K);
    scene.window = window_for(scene.K);
    MaximalVerdict mv = is_maximal_s_free(scene.K, scene.S, scene.window);
    if (!mv.maximal) fail(Err::NotMaximal, "generator produced " + mv.reason);
    scene.verified_maximal = true;
    scene.certificates = mv.witnesses;
    return scene;
}

RatVec interior_combination(const std::vector<RatVec>& verts,
                            std::mt19937_64& rng) {
    std::uniform_int_distribution<int> w(1, 4);
    RatVec q = zero_vec(2);
    Rat total(0);
    for (const RatVec& v : verts) {
        Rat weight(w(rng));
        q = add(q, scale(weight, v));
        total += weight;
    }
    return scale(Rat(1) / total, q);
}

SFreeScene make_split(const CanonicalParams& params, std::mt19937_64& rng) {
    RatVec c = params.split_normal.value_or(vec({1, 0}));
    if (c.size() != 2 || is_zero(c) || !is_integral(c))
        fail(Err::BadParams, "split normal must be a nonzero integer vector");
    c = primitive_integer_direction(c);

    HPolyhedron K0(2);
    K0.add_row(c, Rat(1));
    K0.add_row(scale(Rat(-1), c), Rat(0));

    // Interior cross-section point: c.q = theta in (0,1).
    Int g, xg, yg;
    ext_gcd(Int(c[0].get_num()), Int(c[1].get_num()), g, xg, yg);
    Rat sign = g == 1 ? Rat(1) : Rat(-1);
    RatVec cstar = {Rat(sign * Rat(xg)), Rat(sign * Rat(yg))};
    Rat theta = rand_rat(rng, 1, 6, 7);
    RatVec v = {Rat(-c[1]), c[0]};
    RatVec q = add(scale(theta, cstar), scale(rand_rat(rng, -3, 3, 2), v));
    return recentre(K0, q);
}

SFreeScene make_type1(const CanonicalParams&, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> sub(0, 1u << 20);
    RatMat U = random_unimodular_2d(sub(rng));
    std::uniform_int_distribution<int> sh(-2, 2);
    RatVec shift = {Rat(sh(rng)), Rat(sh(rng))};
    std::vector<RatVec> verts;
    for (const RatVec& t :
         {zero_vec(2), vec({2, 0}), vec({0, 2})})
        verts.push_back(add(mat_vec(U, t), shift));
    HPolyhedron K0 = hull_2d(verts);
    RatVec q = interior_combination(verts, rng);
    return recentre(K0, q);
}

SFreeScene make_type2(const CanonicalParams&, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Apex above y=1; slanted sides pass through (0,1) and (1,1); the
        // base on y=0 then holds at least two lattice points in its relint.
        Rat vy = Rat(1) + rand_rat(rng, 2, 5, 7);   // in (1, 2)
        Rat vx = rand_rat(rng, 1, 6, 7);            // in (0, 1)
        RatVec apex = {vx, vy};
        Rat lx = Rat(-vx / Rat(vy - 1));
        Rat rx = Rat(1) + Rat(Rat(1 - vx) / Rat(vy - 1));
        std::vector<RatVec> verts = {apex, rat_vec({lx, Rat(0)}),
                                     rat_vec({rx, Rat(0)})};
        HPolyhedron K0 = hull_2d(verts);
        RatMat U = random_unimodular_2d(rng());
        std::uniform_int_distribution<int> sh(-1, 1);
        K0 = transform_polyhedron(K0, U, {Rat(sh(rng)), Rat(sh(rng))});
        VertexEnumResult ve = vertex_enum(K0);
        RatVec q = interior_combination(ve.polytope.vertices, rng);
        try {
            return recentre(K0, q);
        } catch (const LatcutError&) {
            continue;
        }
    }
    fail(Err::BadParams, "type 2 generator exhausted its attempts");
}

SFreeScene make_type3(const CanonicalParams&, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Tilt the three sides of the lattice triangle with boundary points
        // (1,0), (0,1), (0,0); nonzero tilts push the vertices off the
        // lattice while each side keeps exactly one relint lattice point.
        std::uniform_int_distribution<int> den(5, 11);
        std::uniform_int_distribution<int> pm(0, 1);
        auto tilt = [&]() {
            Rat t = rat(1, den(rng));
            return pm(rng) ? t : Rat(-t);
        };
        Rat t1 = tilt(), t2 = tilt(), t3 = tilt();
        HPolyhedron K0(2);
        K0.add_row(rat_vec({Rat(1), t1}), Rat(1));
        K0.add_row(rat_vec({t2, Rat(1)}), Rat(1));
        K0.add_row(rat_vec({Rat(-1) + t3, Rat(-1) - t3}), Rat(0));
        if (!bounded(K0)) continue;

        // Structural screen before the expensive verification.
        SSpec Z2 = {2, zero_vec(2), std::nullopt};
        bool vertices_clear = true;
        for (const RatVec& v : vertex_enum(K0).polytope.vertices)
            if (is_integral(v)) vertices_clear = false;
        if (!vertices_clear) continue;
        if (!integer_points(K0, IntBox::cube(2, 12), zero_vec(2), true).empty())
            continue;

        RatVec q = interior_combination(vertex_enum(K0).polytope.vertices, rng);
        try {
            SFreeScene scene = recentre(K0, q);
            // Reject draws that degenerate into other types.
            HPolyhedron Kirr = scene.K;
            bool counts_ok = true;
            for (int i = 0; i < 3; ++i)
                if (facet_relint_points(Kirr, i, scene.S, 0).size() != 1)
                    counts_ok = false;
            if (!counts_ok) continue;
            return scene;
        } catch (const LatcutError&) {
            continue;
        }
    }
    fail(Err::BadParams, "type 3 generator exhausted its attempts");
}

SFreeScene make_quadrilateral(const CanonicalParams&, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Tilted diamond around the fundamental square {0,1}^2: side i
        // rotates about the lattice point it carries.
        std::uniform_int_distribution<int> den(6, 12);
        std::uniform_int_distribution<int> pm(0, 1);
        auto tilt = [&]() {
            Rat t = rat(1, den(rng));
            return pm(rng) ? t : Rat(-t);
        };
        std::vector<RatVec> pts = {vec({0, 0}), vec({1, 0}), vec({1, 1}),
                                   vec({0, 1})};
        std::vector<RatVec> base_normals = {vec({-1, -1}), vec({1, -1}),
                                            vec({1, 1}), vec({-1, 1})};
        HPolyhedron K0(2);
        for (int i = 0; i < 4; ++i) {
            RatVec n = base_normals[i];
            Rat t = tilt();
            RatVec tilted = {Rat(n[0] - t * n[1]), Rat(n[1] + t * n[0])};
            K0.add_row(tilted, dot(tilted, pts[i]));
        }
        if (!bounded(K0) || !interior_point(K0)) continue;
        RatMat U = random_unimodular_2d(rng());
        std::uniform_int_distribution<int> sh(-1, 1);
        K0 = transform_polyhedron(K0, U, {Rat(sh(rng)), Rat(sh(rng))});

        if (!integer_points(K0, IntBox::cube(2, 12), zero_vec(2), true).empty())
            continue;
        bool vertices_clear = true;
        for (const RatVec& v : vertex_enum(K0).polytope.vertices)
            if (is_integral(v)) vertices_clear = false;
        if (!vertices_clear) continue;

        RatVec q = interior_combination(vertex_enum(K0).polytope.vertices, rng);
        try {
            SFreeScene scene = recentre(K0, q);
            if (irredundant_hrep(scene.K).rows.size() != 4) continue;
            bool counts_ok = true;
            for (int i = 0; i < 4; ++i)
                if (facet_relint_points(scene.K, i, scene.S, 0).size() != 1)
                    counts_ok = false;
            if (!counts_ok) continue;
            return scene;
        } catch (const LatcutError&) {
            continue;
        }
    }
    fail(Err::BadParams, "quadrilateral generator exhausted its attempts");
}

}  // namespace

SFreeScene make_canonical(Class2DTag kind, const CanonicalParams& params) {
    std::mt19937_64 rng(params.seed);
    switch (kind) {
        case Class2DTag::Split: return make_split(params, rng);
        case Class2DTag::Type1Triangle: return make_type1(params, rng);
        case Class2DTag::Type2Triangle: return make_type2(params, rng);
        case Class2DTag::Type3Triangle: return make_type3(params, rng);
        case Class2DTag::Quadrilateral: return make_quadrilateral(params, rng);
    }
    fail(Err::BadParams, "unknown canonical kind");
}

}  // namespace latcut
