#include "latcut/exactgeo.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latcut/error.hpp"

namespace latcut {

void HPolyhedron::add_row(const RatVec& a, const Rat& b) {
    if (static_cast<int>(a.size()) != dim)
        fail(Err::DimMismatch, "row dimension mismatch");
    rows.push_back({a, b});
}

bool HPolyhedron::contains(const RatVec& x) const {
    if (static_cast<int>(x.size()) != dim)
        fail(Err::DimMismatch, "point dimension mismatch");
    for (const HalfSpace& h : rows)
        if (dot(h.a, x) > h.b) return false;
    return true;
}

bool HPolyhedron::strictly_contains(const RatVec& x) const {
    if (static_cast<int>(x.size()) != dim)
        fail(Err::DimMismatch, "point dimension mismatch");
    for (const HalfSpace& h : rows) {
        if (is_zero(h.a)) {
            if (h.b < 0) return false;
            continue;
        }
        if (dot(h.a, x) >= h.b) return false;
    }
    return true;
}

IntBox::IntBox(std::vector<long> lo, std::vector<long> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size())
        fail(Err::DimMismatch, "IntBox bound sizes differ");
    for (size_t i = 0; i < lower.size(); ++i)
        if (lower[i] > upper[i]) fail(Err::BadInput, "IntBox lower > upper");
}

IntBox IntBox::cube(int dim, long radius) {
    return IntBox(std::vector<long>(dim, -radius),
                  std::vector<long>(dim, radius));
}

namespace {

// Canonical representative of a halfspace under positive scaling: the normal
// becomes a primitive integer vector and b scales along.
std::pair<RatVec, Rat> canonical_row(const HalfSpace& h) {
    RatVec d = primitive_integer_direction(h.a);
    int k = 0;
    while (h.a[k] == 0) ++k;
    Rat factor = Rat(d[k] / h.a[k]);
    return {d, Rat(factor * h.b)};
}

}  // namespace

HPolyhedron irredundant_hrep(const HPolyhedron& P) {
    if (!feasible(P)) fail(Err::EmptyPolyhedron, "irredundant_hrep");

    // Dominance pass: identical normals keep the tightest (then lowest-index)
    // right-hand side; trivial zero rows are dropped.
    std::vector<int> kept;
    std::map<RatVec, int> best_for_normal;
    for (int i = 0; i < static_cast<int>(P.rows.size()); ++i) {
        if (is_zero(P.rows[i].a)) continue;
        auto [normal, rhs] = canonical_row(P.rows[i]);
        auto it = best_for_normal.find(normal);
        if (it == best_for_normal.end()) {
            best_for_normal[normal] = i;
            kept.push_back(i);
        } else {
            int j = it->second;
            if (rhs < canonical_row(P.rows[j]).second) {
                kept.erase(std::find(kept.begin(), kept.end(), j));
                best_for_normal[normal] = i;
                kept.push_back(i);
            }
        }
    }
    std::sort(kept.begin(), kept.end());

    // LP pass: a row is redundant iff its max over the others does not
    // exceed its rhs. The row's own (relaxed) copy keeps the LP bounded.
    std::vector<bool> alive(kept.size(), true);
    for (size_t i = 0; i < kept.size(); ++i) {
        const HalfSpace& h = P.rows[kept[i]];
        HPolyhedron others(P.dim);
        for (size_t j = 0; j < kept.size(); ++j) {
            if (j == i || !alive[j]) continue;
            others.rows.push_back(P.rows[kept[j]]);
        }
        others.add_row(h.a, Rat(h.b + 1));
        RatVec negated = scale(Rat(-1), h.a);
        LpResult r = lp_min(negated, others);
        if (r.status == LpStatus::Optimal && Rat(-r.value) <= h.b)
            alive[i] = false;
    }

    HPolyhedron out(P.dim);
    for (size_t i = 0; i < kept.size(); ++i)
        if (alive[i]) out.rows.push_back(P.rows[kept[i]]);
    return out;
}

HPolyhedron polar(const VPolytope& V) {
    if (V.vertices.empty()) fail(Err::BadInput, "polar of empty point set");
    HPolyhedron out(static_cast<int>(V.vertices[0].size()));
    for (const RatVec& v : V.vertices) out.add_row(v, Rat(1));
    return out;
}

HPolyhedron normalize_rhs(const HPolyhedron& P) {
    HPolyhedron out(P.dim);
    for (const HalfSpace& h : P.rows) {
        if (is_zero(h.a)) {
            if (h.b < 0) fail(Err::OriginNotInterior, "empty polyhedron");
            continue;  // trivial row
        }
        if (h.b <= 0)
            fail(Err::OriginNotInterior,
                 "row with rhs <= 0 excludes 0 from the interior");
        out.add_row(scale(Rat(1) / h.b, h.a), Rat(1));
    }
    return out;
}

VPolytope smallest_prepolar(const HPolyhedron& K) {
    HPolyhedron canon = irredundant_hrep(normalize_rhs(K));
    VPolytope out;
    for (const HalfSpace& h : canon.rows) {
        if (h.b != 1)
            fail(Err::NonNormalizable, "irredundant row with rhs != 1");
        out.vertices.push_back(h.a);
    }
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
    return out;
}

std::vector<RatVec> lineality_basis(const HPolyhedron& P) {
    std::vector<RatVec> normals;
    for (const HalfSpace& h : P.rows)
        if (!is_zero(h.a)) normals.push_back(h.a);
    if (normals.empty()) {
        std::vector<RatVec> full;
        for (int j = 0; j < P.dim; ++j) {
            RatVec e = zero_vec(P.dim);
            e[j] = 1;
            full.push_back(e);
        }
        return full;
    }
    return kernel_basis(RatMat::from_rows(normals));
}

HPolyhedron recession_cone(const HPolyhedron& P) {
    HPolyhedron out(P.dim);
    for (const HalfSpace& h : P.rows)
        if (!is_zero(h.a)) out.add_row(h.a, Rat(0));
    return out;
}

namespace {

// Extreme rays of rec(P); for cones with lineality the +/- basis pairs are
// emitted instead of a pointed-part decomposition.
std::vector<RatVec> recession_rays(const HPolyhedron& P) {
    HPolyhedron cone = recession_cone(P);
    const int n = P.dim;
    std::set<RatVec, decltype(&lex_less)> out(&lex_less);

    std::vector<RatVec> lin = lineality_basis(cone);
    for (const RatVec& d : lin) {
        out.insert(d);
        out.insert(scale(Rat(-1), d));
    }
    if (!lin.empty() && static_cast<int>(lin.size()) == n)
        return std::vector<RatVec>(out.begin(), out.end());

    auto in_cone = [&](const RatVec& d) {
        for (const HalfSpace& h : cone.rows)
            if (dot(h.a, d) > 0) return false;
        return true;
    };

    if (n == 1) {
        for (long s : {-1L, 1L}) {
            RatVec d = rat_vec({Rat(s)});
            if (in_cone(d)) out.insert(d);
        }
    } else if (n == 2) {
        for (const HalfSpace& h : cone.rows) {
            RatVec t = rat_vec({Rat(-h.a[1]), h.a[0]});
            for (const RatVec& d : {t, scale(Rat(-1), t)}) {
                if (is_zero(d) || !in_cone(d)) continue;
                out.insert(primitive_integer_direction(d));
            }
        }
    } else if (n == 3) {
        for (size_t i = 0; i < cone.rows.size(); ++i) {
            for (size_t j = i + 1; j < cone.rows.size(); ++j) {
                RatMat m = RatMat::from_rows({cone.rows[i].a, cone.rows[j].a});
                std::vector<RatVec> ker = kernel_basis(m);
                if (ker.size() != 1) continue;
                for (const RatVec& d : {ker[0], scale(Rat(-1), ker[0])}) {
                    if (!in_cone(d)) continue;
                    // Extremality: tight normals must span rank n-1.
                    std::vector<RatVec> tight;
                    for (const HalfSpace& h : cone.rows)
                        if (dot(h.a, d) == 0) tight.push_back(h.a);
                    if (rank(RatMat::from_rows(tight)) == n - 1)
                        out.insert(primitive_integer_direction(d));
                }
            }
        }
    }
    return std::vector<RatVec>(out.begin(), out.end());
}

void collect_vertices(const HPolyhedron& P, std::vector<int>& pick, int from,
                      std::set<RatVec, decltype(&lex_less)>& found) {
    const int n = P.dim;
    if (static_cast<int>(pick.size()) == n) {
        std::vector<RatVec> normals;
        RatVec rhs;
        for (int idx : pick) {
            normals.push_back(P.rows[idx].a);
            rhs.push_back(P.rows[idx].b);
        }
        RatMat m = RatMat::from_rows(normals);
        RatVec x;
        if (solve_linear(m, rhs, x) && P.contains(x)) found.insert(x);
        return;
    }
    for (int i = from; i < static_cast<int>(P.rows.size()); ++i) {
        pick.push_back(i);
        collect_vertices(P, pick, i + 1, found);
        pick.pop_back();
    }
}

}  // namespace

VertexEnumResult vertex_enum(const HPolyhedron& P) {
    if (P.dim > 3) fail(Err::DimensionTooLarge, "vertex_enum supports n <= 3");
    if (!feasible(P)) fail(Err::EmptyPolyhedron, "vertex_enum");

    std::set<RatVec, decltype(&lex_less)> found(&lex_less);
    std::vector<int> pick;
    collect_vertices(P, pick, 0, found);

    VertexEnumResult out;
    out.polytope.vertices.assign(found.begin(), found.end());
    out.rays = recession_rays(P);
    if (out.polytope.vertices.empty()) {
        // No vertices (nontrivial lineality): anchor the V-description at a
        // deterministic feasible point.
        out.polytope.vertices.push_back(lp_min(zero_vec(P.dim), P).point);
    }
    return out;
}

std::vector<RatVec> integer_points(const HPolyhedron& P, const IntBox& window,
                                   const RatVec& shift, bool strict_interior) {
    const int n = P.dim;
    if (window.dim() != n || static_cast<int>(shift.size()) != n)
        fail(Err::DimMismatch, "integer_points window/shift");

    std::vector<RatVec> out;
    std::vector<long> z(window.lower);
    while (true) {
        RatVec x(n);
        for (int j = 0; j < n; ++j) x[j] = Rat(shift[j] + Rat(z[j]));
        bool inside = strict_interior ? P.strictly_contains(x) : P.contains(x);
        if (inside) out.push_back(x);

        int j = n - 1;
        while (j >= 0 && z[j] == window.upper[j]) {
            z[j] = window.lower[j];
            --j;
        }
        if (j < 0) break;
        ++z[j];
    }
    // Odometer order with the last coordinate fastest is already
    // lexicographic in x; keep the sort as a guard for callers.
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

namespace {

// Counterclockwise order around an interior reference point; exact.
void sort_ccw(std::vector<RatVec>& pts) {
    if (pts.size() < 3) return;
    RatVec center = zero_vec(2);
    for (const RatVec& p : pts) center = add(center, p);
    center = scale(Rat(1, static_cast<long>(pts.size())) , center);

    auto half = [&](const RatVec& p) {
        Rat dy = Rat(p[1] - center[1]);
        Rat dx = Rat(p[0] - center[0]);
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RatVec& p, const RatVec& q) {
        int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        Rat cross = Rat((p[0] - center[0]) * (q[1] - center[1]) -
                        (p[1] - center[1]) * (q[0] - center[0]));
        if (cross != 0) return cross > 0;
        return lex_less(p, q);
    });
}

}  // namespace

HPolyhedron simplex_hrep(const std::vector<RatVec>& vertices) {
    if (vertices.empty()) fail(Err::BadInput, "simplex_hrep: no vertices");
    int d = static_cast<int>(vertices[0].size());
    if (d != 2 && d != 3) fail(Err::DimensionUnsupported, "simplex_hrep");
    if (static_cast<int>(vertices.size()) != d + 1)
        fail(Err::BadInput, "simplex_hrep needs d+1 vertices");

    HPolyhedron out(d);
    for (int omit = 0; omit <= d; ++omit) {
        std::vector<RatVec> face;
        for (int i = 0; i <= d; ++i)
            if (i != omit) face.push_back(vertices[i]);
        RatVec normal;
        if (d == 2) {
            RatVec e = sub(face[1], face[0]);
            normal = {Rat(-e[1]), e[0]};
        } else {
            RatVec u = sub(face[1], face[0]);
            RatVec v = sub(face[2], face[0]);
            normal = {Rat(u[1] * v[2] - u[2] * v[1]),
                      Rat(u[2] * v[0] - u[0] * v[2]),
                      Rat(u[0] * v[1] - u[1] * v[0])};
        }
        if (is_zero(normal)) fail(Err::BadInput, "degenerate simplex");
        Rat rhs = dot(normal, face[0]);
        if (dot(normal, vertices[omit]) > rhs) {
            normal = scale(Rat(-1), normal);
            rhs = Rat(-rhs);
        }
        if (dot(normal, vertices[omit]) == rhs)
            fail(Err::BadInput, "degenerate simplex");
        out.add_row(normal, rhs);
    }
    return out;
}

Rat polygon_area(const HPolyhedron& P) {
    if (P.dim != 2) fail(Err::DimensionUnsupported, "polygon_area needs n=2");
    if (!feasible(P)) return Rat(0);
    VertexEnumResult ve = vertex_enum(P);
    if (!ve.rays.empty()) fail(Err::UnboundedInput, "polygon_area");
    std::vector<RatVec> pts = ve.polytope.vertices;
    if (pts.size() < 3) return Rat(0);
    sort_ccw(pts);
    Rat twice(0);
    for (size_t i = 0; i < pts.size(); ++i) {
        const RatVec& p = pts[i];
        const RatVec& q = pts[(i + 1) % pts.size()];
        twice += p[0] * q[1] - p[1] * q[0];
    }
    if (twice < 0) twice = Rat(-twice);
    return Rat(twice / 2);
}

namespace {

// Convex polygons as exact counterclockwise vertex rings; all the union
// arithmetic below is straight clipping with no LP calls.
using Ring = std::vector<RatVec>;

Rat ring_twice_area(const Ring& ring) {
    Rat twice(0);
    for (size_t i = 0; i < ring.size(); ++i) {
        const RatVec& p = ring[i];
        const RatVec& q = ring[(i + 1) % ring.size()];
        twice += p[0] * q[1] - p[1] * q[0];
    }
    return twice;
}

bool degenerate(const Ring& ring) {
    return ring.size() < 3 || ring_twice_area(ring) == 0;
}

// Sutherland-Hodgman clip of a convex ccw ring by a . x <= b.
Ring clip_ring(const Ring& ring, const RatVec& a, const Rat& b) {
    Ring out;
    size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        const RatVec& p = ring[i];
        const RatVec& q = ring[(i + 1) % n];
        Rat vp = dot(a, p), vq = dot(a, q);
        bool pin = vp <= b, qin = vq <= b;
        if (pin) out.push_back(p);
        if (pin != qin) {
            Rat t = Rat(Rat(b - vp) / Rat(vq - vp));
            out.push_back(add(p, scale(t, sub(q, p))));
        }
    }
    return out;
}

struct Box2 {
    Rat xlo, xhi, ylo, yhi;
};

Box2 ring_box(const Ring& ring) {
    Box2 box{ring[0][0], ring[0][0], ring[0][1], ring[0][1]};
    for (const RatVec& p : ring) {
        if (p[0] < box.xlo) box.xlo = p[0];
        if (p[0] > box.xhi) box.xhi = p[0];
        if (p[1] < box.ylo) box.ylo = p[1];
        if (p[1] > box.yhi) box.yhi = p[1];
    }
    return box;
}

bool boxes_meet(const Box2& a, const Box2& b) {
    return !(a.xhi < b.xlo || b.xhi < a.xlo || a.yhi < b.ylo || b.yhi < a.ylo);
}

// piece \ Q as convex cells (boundary overlaps are measure zero).
void subtract_into(const Ring& piece, const HPolyhedron& Q,
                   std::vector<Ring>& out) {
    Ring rest = piece;
    for (const HalfSpace& h : Q.rows) {
        if (is_zero(h.a)) continue;
        Ring outside = clip_ring(rest, scale(Rat(-1), h.a), Rat(-h.b));
        if (!degenerate(outside)) out.push_back(std::move(outside));
        rest = clip_ring(rest, h.a, h.b);
        if (degenerate(rest)) return;
    }
    // What remains lies inside Q and is discarded.
}

}  // namespace

Rat polygon_union_area(const std::vector<HPolyhedron>& polys) {
    std::vector<Ring> rings;
    std::vector<Box2> boxes;
    std::vector<const HPolyhedron*> sources;
    for (const HPolyhedron& P : polys) {
        if (P.dim != 2)
            fail(Err::DimensionUnsupported, "polygon_union_area needs n=2");
        VertexEnumResult ve = vertex_enum(P);
        if (!ve.rays.empty()) fail(Err::UnboundedInput, "polygon_union_area");
        Ring ring = ve.polytope.vertices;
        if (ring.size() >= 3) sort_ccw(ring);
        if (degenerate(ring)) continue;  // contributes zero area
        rings.push_back(std::move(ring));
        boxes.push_back(ring_box(rings.back()));
        sources.push_back(&P);
    }

    Rat total(0);
    for (size_t i = 0; i < rings.size(); ++i) {
        std::vector<Ring> pieces = {rings[i]};
        for (size_t j = 0; j < i && !pieces.empty(); ++j) {
            if (!boxes_meet(boxes[i], boxes[j])) continue;
            std::vector<Ring> next;
            for (const Ring& piece : pieces) {
                if (!boxes_meet(ring_box(piece), boxes[j])) {
                    next.push_back(piece);
                    continue;
                }
                subtract_into(piece, *sources[j], next);
            }
            pieces = std::move(next);
        }
        for (const Ring& piece : pieces) {
            Rat twice = ring_twice_area(piece);
            if (twice < 0) twice = Rat(-twice);
            total += Rat(twice / 2);
        }
    }
    return total;
}

}  // namespace latcut
