#ifndef LATCUT_EXACTGEO_HPP
#define LATCUT_EXACTGEO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "latcut/rational.hpp"

namespace latcut {

// One inequality a . x <= b.
struct HalfSpace {
    RatVec a;
    Rat b;
};

// Rational inequality description {x : a_i . x <= b_i}. Emptiness and
// unboundedness are computed predicates (feasible / bounded below), never
// encoded through sentinel rows.
struct HPolyhedron {
    int dim = 0;
    std::vector<HalfSpace> rows;

    HPolyhedron() = default;
    explicit HPolyhedron(int n) : dim(n) {}

    void add_row(const RatVec& a, const Rat& b);
    bool contains(const RatVec& x) const;
    bool strictly_contains(const RatVec& x) const;  // x in int(P)
};

struct VPolytope {
    std::vector<RatVec> vertices;
};

// Integer enumeration window, lower <= z <= upper componentwise.
struct IntBox {
    std::vector<long> lower;
    std::vector<long> upper;

    IntBox() = default;
    IntBox(std::vector<long> lo, std::vector<long> hi);
    static IntBox cube(int dim, long radius);
    int dim() const { return static_cast<int>(lower.size()); }
};

// ---- Exact linear programming -------------------------------------------

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;
    RatVec point;
};

// min c . x over P, rational simplex with Bland's rule. Solves through a
// standard-form tableau (free variables split, slacks, phase 1 artificials),
// so it is deterministic and cannot cycle.
LpResult lp_solve(const RatVec& c, const HPolyhedron& P);

// Wrapper enforcing the operation contract: throws EmptyPolyhedron when P is
// infeasible; Unbounded status is reported in the result.
LpResult lp_min(const RatVec& c, const HPolyhedron& P);

bool feasible(const HPolyhedron& P);
bool bounded(const HPolyhedron& P);

// Interior point found by maximizing the uniform slack (capped at 1).
// Returns nothing when P has empty interior.
std::optional<RatVec> interior_point(const HPolyhedron& P);

// Per-coordinate bounds; nullopt entry means unbounded in that direction.
struct CoordBounds {
    std::vector<std::optional<Rat>> lower;
    std::vector<std::optional<Rat>> upper;
};
CoordBounds coordinate_bounds(const HPolyhedron& P);

// ---- Polyhedral operations ----------------------------------------------

// Same set, duplicates and implied rows removed; keeps the lowest-index
// representative among duplicates. Throws EmptyPolyhedron.
HPolyhedron irredundant_hrep(const HPolyhedron& P);

// {x : v . x <= 1 for all vertices v}.
HPolyhedron polar(const VPolytope& V);

// Same set with every right-hand side equal to 1; requires 0 in int(P).
HPolyhedron normalize_rhs(const HPolyhedron& P);

// The point set {a_i} of the irredundant rhs-1 description of K.
VPolytope smallest_prepolar(const HPolyhedron& K);

// Minimal V-description for n <= 3: vertices plus extreme rays (each ray a
// primitive integer direction), both in lexicographic order. A polyhedron
// with lineality gets +/- direction pairs in the ray list.
struct VertexEnumResult {
    VPolytope polytope;
    std::vector<RatVec> rays;
};
VertexEnumResult vertex_enum(const HPolyhedron& P);

// All points of (shift + Z^n) with integer part in `window` lying in P
// (or int(P) when strict_interior), sorted lexicographically.
std::vector<RatVec> integer_points(const HPolyhedron& P, const IntBox& window,
                                   const RatVec& shift,
                                   bool strict_interior = false);

// lin(P) = {x : a_i . x = 0 for all rows}, as primitive integer basis.
std::vector<RatVec> lineality_basis(const HPolyhedron& P);

// rec(P) = {x : a_i . x <= 0}.
HPolyhedron recession_cone(const HPolyhedron& P);

// Facet description of a full-dimensional simplex from its d+1 vertices
// (d = 2 or 3).
HPolyhedron simplex_hrep(const std::vector<RatVec>& vertices);

// Exact area of a bounded 2-dimensional polytope (0 if empty/degenerate).
Rat polygon_area(const HPolyhedron& P);

// Exact area of the union; inclusion handled by disjoint convex
// decomposition, so the result is independent of input order.
Rat polygon_union_area(const std::vector<HPolyhedron>& polys);

}  // namespace latcut

#endif
