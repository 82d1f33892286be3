#include "latcut/groupfn.hpp"

#include <algorithm>
#include <set>

#include "latcut/error.hpp"

namespace latcut {

Rat eval(const MaxForm& f, const RatVec& r) {
    if (f.rows.empty()) fail(Err::BadInput, "empty MaxForm");
    if (r.size() != f.rows[0].size()) fail(Err::DimMismatch, "MaxForm eval");
    Rat best = f.include_zero_term ? Rat(0) : dot(f.rows[0], r);
    for (const RatVec& a : f.rows) {
        Rat v = dot(a, r);
        if (v > best) best = v;
    }
    return best;
}

PwlPeriodic1D make_pwl1d(const RatVec& breakpoints, const RatVec& values) {
    if (breakpoints.empty() || breakpoints.size() != values.size())
        fail(Err::BadInput, "breakpoint/value lengths");
    if (breakpoints[0] != 0)
        fail(Err::NotPeriodic, "first breakpoint must be 0");
    for (size_t i = 0; i < breakpoints.size(); ++i) {
        if (breakpoints[i] < 0 || breakpoints[i] >= 1)
            fail(Err::NotPeriodic, "breakpoints must lie in [0,1)");
        if (i > 0) {
            if (breakpoints[i] == breakpoints[i - 1])
                fail(Err::NotContinuous,
                     "duplicate breakpoint encodes a jump");
            if (breakpoints[i] < breakpoints[i - 1])
                fail(Err::BadInput, "breakpoints must be sorted");
        }
    }
    return {breakpoints, values};
}

namespace {

struct Cell1D {
    Rat lo, hi;       // subinterval of [0,1]
    Rat slope, off;   // value = slope*x + off on [lo,hi]
};

std::vector<Cell1D> cells_of(const PwlPeriodic1D& f) {
    size_t m = f.breakpoints.size();
    std::vector<Cell1D> cells;
    for (size_t i = 0; i < m; ++i) {
        Rat lo = f.breakpoints[i];
        Rat hi = i + 1 < m ? f.breakpoints[i + 1] : Rat(1);
        Rat vhi = i + 1 < m ? f.values[i + 1] : f.values[0];  // periodic wrap
        Rat slope = Rat((vhi - f.values[i]) / (hi - lo));
        Rat off = Rat(f.values[i] - slope * lo);
        cells.push_back({lo, hi, slope, off});
    }
    return cells;
}

}  // namespace

Rat eval(const PwlPeriodic1D& f, const Rat& x) {
    Rat t = frac(x);
    size_t m = f.breakpoints.size();
    size_t i = m - 1;
    for (size_t j = 1; j < m; ++j) {
        if (f.breakpoints[j] > t) {
            i = j - 1;
            break;
        }
    }
    Rat lo = f.breakpoints[i];
    Rat hi = i + 1 < m ? f.breakpoints[i + 1] : Rat(1);
    Rat vlo = f.values[i];
    Rat vhi = i + 1 < m ? f.values[i + 1] : f.values[0];
    return Rat(vlo + Rat((vhi - vlo) / (hi - lo)) * Rat(t - lo));
}

std::vector<Rat> slope_values(const PwlPeriodic1D& f) {
    std::set<Rat> out;
    for (const Cell1D& c : cells_of(f)) out.insert(c.slope);
    return std::vector<Rat>(out.begin(), out.end());
}

void validate_complex(const PwlComplex2D& f) {
    if (f.cells.empty()) fail(Err::BadInput, "empty complex");
    std::vector<HPolyhedron> clipped;
    HPolyhedron square(2);
    square.add_row(vec({1, 0}), Rat(1));
    square.add_row(vec({-1, 0}), Rat(0));
    square.add_row(vec({0, 1}), Rat(1));
    square.add_row(vec({0, -1}), Rat(0));
    for (const AffineCell2& c : f.cells) {
        if (c.cell.dim != 2 || c.gradient.size() != 2)
            fail(Err::DimMismatch, "complex cell dimension");
        if (!bounded(c.cell)) fail(Err::BadInput, "unbounded complex cell");
        HPolyhedron clip = c.cell;
        for (const HalfSpace& h : square.rows) clip.add_row(h.a, h.b);
        clipped.push_back(clip);
    }
    if (polygon_union_area(clipped) != 1)
        fail(Err::BadInput, "cells do not cover the fundamental square");

    // Overlaps and shared faces must agree (continuity of the function).
    for (size_t i = 0; i < f.cells.size(); ++i) {
        for (size_t j = i + 1; j < f.cells.size(); ++j) {
            HPolyhedron inter = f.cells[i].cell;
            for (const HalfSpace& h : f.cells[j].cell.rows)
                inter.add_row(h.a, h.b);
            if (!feasible(inter)) continue;
            for (const RatVec& v : vertex_enum(inter).polytope.vertices) {
                Rat vi = Rat(dot(f.cells[i].gradient, v) + f.cells[i].offset);
                Rat vj = Rat(dot(f.cells[j].gradient, v) + f.cells[j].offset);
                if (vi != vj)
                    fail(Err::NotContinuous,
                         "cells disagree at " + vec_to_string(v));
            }
        }
    }
}

Rat eval(const PwlComplex2D& f, const RatVec& x) {
    if (x.size() != 2) fail(Err::DimMismatch, "complex eval");
    RatVec t = {frac(x[0]), frac(x[1])};
    for (const AffineCell2& c : f.cells)
        if (c.cell.contains(t)) return Rat(dot(c.gradient, t) + c.offset);
    fail(Err::BadInput, "point not covered by the complex");
}

std::vector<RatVec> slope_values(const PwlComplex2D& f) {
    std::set<RatVec, decltype(&lex_less)> out(&lex_less);
    for (const AffineCell2& c : f.cells) out.insert(c.gradient);
    return std::vector<RatVec>(out.begin(), out.end());
}

namespace {

void require_nonnegative(const PwlPeriodic1D& pi) {
    for (const Rat& v : pi.values)
        if (v < 0) fail(Err::BadParams, "check_minimal needs pi >= 0");
}

// Exact subadditivity for 1D PWL: on each cell triple (x in C_i, y in C_j,
// x+y-c in C_k) the gap Delta is affine, so its minimum sits at a vertex of
// the triple's polygon.
std::optional<SubadditivityWitness> subadditivity_gap_1d(
    const PwlPeriodic1D& pi) {
    std::vector<Cell1D> cells = cells_of(pi);
    std::optional<SubadditivityWitness> worst;
    for (const Cell1D& cx : cells) {
        for (const Cell1D& cy : cells) {
            for (const Cell1D& cz : cells) {
                for (long carry = 0; carry <= 1; ++carry) {
                    HPolyhedron tri(2);
                    tri.add_row(vec({1, 0}), cx.hi);
                    tri.add_row(vec({-1, 0}), Rat(-cx.lo));
                    tri.add_row(vec({0, 1}), cy.hi);
                    tri.add_row(vec({0, -1}), Rat(-cy.lo));
                    tri.add_row(vec({1, 1}), Rat(cz.hi + carry));
                    tri.add_row(vec({-1, -1}), Rat(-(cz.lo + carry)));
                    if (!feasible(tri)) continue;
                    for (const RatVec& v :
                         vertex_enum(tri).polytope.vertices) {
                        Rat delta = Rat(
                            Rat(cx.slope * v[0] + cx.off) +
                            Rat(cy.slope * v[1] + cy.off) -
                            Rat(cz.slope * Rat(v[0] + v[1] - carry) + cz.off));
                        if (delta < 0 && (!worst || delta < worst->violation))
                            worst = {{v[0]}, {v[1]}, delta};
                    }
                }
            }
        }
    }
    return worst;
}

std::optional<RatVec> symmetry_gap_1d(const PwlPeriodic1D& pi, const Rat& b) {
    std::set<Rat> points(pi.breakpoints.begin(), pi.breakpoints.end());
    for (const Rat& beta : pi.breakpoints) points.insert(frac(Rat(b - beta)));
    for (const Rat& p : points) {
        if (Rat(eval(pi, p) + eval(pi, Rat(b - p))) != 1)
            return RatVec{p};
    }
    return std::nullopt;
}

}  // namespace

MinimalityReport check_minimal(const PwlPeriodic1D& pi, const Rat& b) {
    require_nonnegative(pi);
    MinimalityReport report;
    report.zero_on_lattice = (pi.values[0] == 0);
    report.subadditivity_violation = subadditivity_gap_1d(pi);
    report.subadditive = !report.subadditivity_violation.has_value();
    report.symmetry_violation = symmetry_gap_1d(pi, b);
    report.symmetric = !report.symmetry_violation.has_value();
    report.minimal =
        report.zero_on_lattice && report.subadditive && report.symmetric;
    return report;
}

namespace {

struct CellBox {
    Rat xlo, xhi, ylo, yhi;
};

CellBox bbox_of(const HPolyhedron& P) {
    CoordBounds cb = coordinate_bounds(P);
    return {*cb.lower[0], *cb.upper[0], *cb.lower[1], *cb.upper[1]};
}

std::optional<SubadditivityWitness> subadditivity_gap_2d(
    const PwlComplex2D& pi) {
    std::vector<CellBox> boxes;
    boxes.reserve(pi.cells.size());
    for (const AffineCell2& c : pi.cells) boxes.push_back(bbox_of(c.cell));

    std::optional<SubadditivityWitness> worst;
    size_t m = pi.cells.size();
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            for (size_t k = 0; k < m; ++k) {
                for (long w0 = 0; w0 <= 1; ++w0) {
                    for (long w1 = 0; w1 <= 1; ++w1) {
                        // Quick interval rejection of x + y in C_k + w.
                        if (Rat(boxes[i].xhi + boxes[j].xhi) <
                                Rat(boxes[k].xlo + w0) ||
                            Rat(boxes[i].xlo + boxes[j].xlo) >
                                Rat(boxes[k].xhi + w0) ||
                            Rat(boxes[i].yhi + boxes[j].yhi) <
                                Rat(boxes[k].ylo + w1) ||
                            Rat(boxes[i].ylo + boxes[j].ylo) >
                                Rat(boxes[k].yhi + w1))
                            continue;

                        // Variables (x1,x2,y1,y2).
                        HPolyhedron T(4);
                        auto lift = [&](const HPolyhedron& cell, int slot,
                                        const RatVec& shift) {
                            for (const HalfSpace& h : cell.rows) {
                                RatVec a = zero_vec(4);
                                if (slot == 0) {       // acts on x
                                    a[0] = h.a[0];
                                    a[1] = h.a[1];
                                } else if (slot == 1) {  // acts on y
                                    a[2] = h.a[0];
                                    a[3] = h.a[1];
                                } else {               // acts on x+y-shift
                                    a[0] = h.a[0];
                                    a[1] = h.a[1];
                                    a[2] = h.a[0];
                                    a[3] = h.a[1];
                                }
                                Rat rhs = h.b;
                                if (slot == 2) rhs += dot(h.a, shift);
                                T.add_row(a, rhs);
                            }
                        };
                        RatVec w = {Rat(w0), Rat(w1)};
                        lift(pi.cells[i].cell, 0, w);
                        lift(pi.cells[j].cell, 1, w);
                        lift(pi.cells[k].cell, 2, w);

                        const RatVec& gi = pi.cells[i].gradient;
                        const RatVec& gj = pi.cells[j].gradient;
                        const RatVec& gk = pi.cells[k].gradient;
                        RatVec obj = {Rat(gi[0] - gk[0]), Rat(gi[1] - gk[1]),
                                      Rat(gj[0] - gk[0]), Rat(gj[1] - gk[1])};
                        Rat constant = Rat(pi.cells[i].offset +
                                           pi.cells[j].offset -
                                           pi.cells[k].offset + dot(gk, w));
                        LpResult r = lp_solve(obj, T);
                        if (r.status != LpStatus::Optimal) continue;
                        Rat delta = Rat(r.value + constant);
                        if (delta < 0 && (!worst || delta < worst->violation)) {
                            RatVec x = {r.point[0], r.point[1]};
                            RatVec y = {r.point[2], r.point[3]};
                            worst = {x, y, delta};
                        }
                    }
                }
            }
        }
    }
    return worst;
}

std::optional<RatVec> symmetry_gap_2d(const PwlComplex2D& pi, const RatVec& b) {
    size_t m = pi.cells.size();
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            for (long w0 = -1; w0 <= 1; ++w0) {
                for (long w1 = -1; w1 <= 1; ++w1) {
                    // p in C_i with b - p - w in C_j.
                    HPolyhedron R = pi.cells[i].cell;
                    RatVec shift = {Rat(b[0] - Rat(w0)), Rat(b[1] - Rat(w1))};
                    for (const HalfSpace& h : pi.cells[j].cell.rows) {
                        RatVec a = scale(Rat(-1), h.a);
                        R.add_row(a, Rat(h.b - dot(h.a, shift)));
                    }
                    if (!feasible(R)) continue;
                    for (const RatVec& v : vertex_enum(R).polytope.vertices) {
                        RatVec q = sub(shift, v);
                        Rat total = Rat(
                            Rat(dot(pi.cells[i].gradient, v) +
                                pi.cells[i].offset) +
                            Rat(dot(pi.cells[j].gradient, q) +
                                pi.cells[j].offset));
                        if (total != 1) return v;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

MinimalityReport check_minimal(const PwlComplex2D& pi, const RatVec& b) {
    validate_complex(pi);
    for (const AffineCell2& c : pi.cells)
        for (const RatVec& v : vertex_enum(c.cell).polytope.vertices)
            if (Rat(dot(c.gradient, v) + c.offset) < 0)
                fail(Err::BadParams, "check_minimal needs pi >= 0");

    MinimalityReport report;
    report.zero_on_lattice = (eval(pi, zero_vec(2)) == 0);
    report.subadditivity_violation = subadditivity_gap_2d(pi);
    report.subadditive = !report.subadditivity_violation.has_value();
    report.symmetry_violation = symmetry_gap_2d(pi, b);
    report.symmetric = !report.symmetry_violation.has_value();
    report.minimal =
        report.zero_on_lattice && report.subadditive && report.symmetric;
    return report;
}

std::vector<HPolyhedron> additivity_domain(const PwlPeriodic1D& pi) {
    std::vector<Cell1D> cells = cells_of(pi);
    std::vector<HPolyhedron> faces;
    std::set<std::string> seen;
    for (const Cell1D& cx : cells) {
        for (const Cell1D& cy : cells) {
            for (const Cell1D& cz : cells) {
                for (long carry = 0; carry <= 1; ++carry) {
                    HPolyhedron tri(2);
                    tri.add_row(vec({1, 0}), cx.hi);
                    tri.add_row(vec({-1, 0}), Rat(-cx.lo));
                    tri.add_row(vec({0, 1}), cy.hi);
                    tri.add_row(vec({0, -1}), Rat(-cy.lo));
                    tri.add_row(vec({1, 1}), Rat(cz.hi + carry));
                    tri.add_row(vec({-1, -1}), Rat(-(cz.lo + carry)));
                    if (!feasible(tri)) continue;

                    // Delta = alpha*x + beta*y + gamma on this triple.
                    Rat alpha = Rat(cx.slope - cz.slope);
                    Rat beta = Rat(cy.slope - cz.slope);
                    Rat gamma =
                        Rat(cx.off + cy.off - cz.off + cz.slope * carry);

                    HPolyhedron face = tri;
                    if (alpha != 0 || beta != 0) {
                        face.add_row(rat_vec({alpha, beta}), Rat(-gamma));
                        face.add_row(rat_vec({Rat(-alpha), Rat(-beta)}), gamma);
                    } else if (gamma != 0) {
                        continue;  // Delta is a nonzero constant: no face
                    }
                    if (!feasible(face)) continue;

                    // Deduplicate by the vertex signature.
                    VertexEnumResult ve = vertex_enum(face);
                    std::string key;
                    for (const RatVec& v : ve.polytope.vertices)
                        key += vec_to_string(v) + ";";
                    if (seen.insert(key).second) faces.push_back(face);
                }
            }
        }
    }
    return faces;
}

ExtremeCertificate certify_two_slope_extreme(const PwlPeriodic1D& pi,
                                             const Rat& b) {
    ExtremeCertificate cert;
    cert.minimality = check_minimal(pi, b);
    cert.slope_count = static_cast<int>(slope_values(pi).size());
    if (!cert.minimality.minimal)
        cert.failed_hypotheses.push_back("not minimal");
    if (cert.slope_count != 2)
        cert.failed_hypotheses.push_back(
            "slope count " + std::to_string(cert.slope_count) + " != 2");
    cert.extreme = cert.failed_hypotheses.empty();
    return cert;
}

ExtremeCertificate certify_nplus1_hypotheses(const PwlComplex2D& pi,
                                             const RatVec& b) {
    ExtremeCertificate cert;
    cert.minimality = check_minimal(pi, b);
    std::vector<RatVec> grads = slope_values(pi);
    cert.slope_count = static_cast<int>(grads.size());
    if (!cert.minimality.minimal)
        cert.failed_hypotheses.push_back("not minimal");
    if (cert.slope_count > 3)
        cert.failed_hypotheses.push_back(
            "slope count " + std::to_string(cert.slope_count) + " > 3");
    if (rank(RatMat::from_rows(grads)) < 2)
        cert.failed_hypotheses.push_back(
            "gradients do not span R^2 (not genuinely 2-dimensional)");
    if (cert.failed_hypotheses.empty() && cert.slope_count != 3)
        cert.failed_hypotheses.push_back(
            "slope count below n+1 contradicts the hypotheses");
    cert.extreme = cert.failed_hypotheses.empty();
    return cert;
}

MaxForm psi_from_pi(const PwlPeriodic1D& pi) {
    if (pi.values[0] != 0) fail(Err::OriginValueNonzero, "psi_from_pi");
    std::vector<Cell1D> cells = cells_of(pi);
    Rat first = cells.front().slope;
    Rat last = cells.back().slope;
    if (first < last)
        fail(Err::NotSublinear, "one-sided derivative at 0 is not sublinear");
    MaxForm out;
    out.rows = {RatVec{first}, RatVec{last}};
    return out;
}

MaxForm psi_from_pi(const PwlComplex2D& pi) {
    std::set<RatVec, decltype(&lex_less)> rows(&lex_less);
    struct Incident {
        RatVec gradient;
        RatVec corner;
        HPolyhedron cell;
    };
    std::vector<Incident> incidents;
    for (long w0 = 0; w0 <= 1; ++w0) {
        for (long w1 = 0; w1 <= 1; ++w1) {
            RatVec corner = {Rat(w0), Rat(w1)};
            for (const AffineCell2& c : pi.cells) {
                if (!c.cell.contains(corner)) continue;
                if (Rat(dot(c.gradient, corner) + c.offset) != 0)
                    fail(Err::OriginValueNonzero,
                         "pi does not vanish on the lattice");
                rows.insert(c.gradient);
                incidents.push_back({c.gradient, corner, c.cell});
            }
        }
    }
    if (rows.empty()) fail(Err::BadInput, "no cells touch the lattice points");
    MaxForm out;
    out.rows.assign(rows.begin(), rows.end());

    // The max formula equals the one-sided derivative iff that derivative is
    // sublinear; verifying equality on every incident cone's extreme
    // directions certifies it exactly.
    for (const Incident& inc : incidents) {
        for (const RatVec& v : vertex_enum(inc.cell).polytope.vertices) {
            RatVec d = sub(v, inc.corner);
            if (is_zero(d)) continue;
            if (eval(out, d) != dot(inc.gradient, d))
                fail(Err::NotSublinear,
                     "directional derivative at 0 is not sublinear");
        }
    }
    return out;
}

}  // namespace latcut
