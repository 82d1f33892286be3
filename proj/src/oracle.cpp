#include "latcut/oracle.hpp"

#include <algorithm>

#include "latcut/error.hpp"
#include "latcut/cgf.hpp"

namespace latcut {

namespace {

template <typename Fn>
void for_each_box(const IntBox& box, Fn&& fn) {
    int n = box.dim();
    if (n == 0) {
        fn(std::vector<long>{});
        return;
    }
    std::vector<long> z(box.lower);
    for (int j = 0; j < n; ++j)
        if (box.lower[j] > box.upper[j]) return;
    while (true) {
        if (!fn(z)) return;
        int j = n - 1;
        while (j >= 0 && z[j] == box.upper[j]) {
            z[j] = box.lower[j];
            --j;
        }
        if (j < 0) return;
        ++z[j];
    }
}

IntBox clamp_nonnegative(const IntBox& box) {
    IntBox out = box;
    for (size_t j = 0; j < out.lower.size(); ++j)
        if (out.lower[j] < 0) out.lower[j] = 0;
    return out;
}

}  // namespace

ValidityVerdict cut_validity_bruteforce(const Cut& cut, const CornerTableau& t,
                                        const EnumBudget& budget) {
    size_t k = t.cont_cols.size();
    size_t ell = t.int_cols.size();
    if (cut.s_coeffs.size() != k || cut.y_coeffs.size() != ell)
        fail(Err::DimMismatch, "cut does not match the tableau");
    if (budget.y_box.dim() != static_cast<int>(ell) ||
        budget.w_box.dim() != t.n)
        fail(Err::DimMismatch, "budget boxes do not match the tableau");

    IntBox y_box = clamp_nonnegative(budget.y_box);
    ValidityVerdict out;
    bool exhausted = false;

    for_each_box(y_box, [&](const std::vector<long>& y) {
        Rat y_part(0);
        for (size_t j = 0; j < ell; ++j) y_part += cut.y_coeffs[j] * Rat(y[j]);

        bool keep_going = true;
        for_each_box(budget.w_box, [&](const std::vector<long>& w) {
            // Target d = b + w - P y; feasibility of Rs = d, s >= 0.
            RatVec d(t.n);
            for (int i = 0; i < t.n; ++i) {
                d[i] = Rat(t.b[i] + Rat(w[i]));
                for (size_t j = 0; j < ell; ++j)
                    d[i] -= t.int_cols[j][i] * Rat(y[j]);
            }

            if (k == 0) {
                if (!is_zero(d)) return true;
                if (y_part < 1) {
                    out.kind = VerdictKind::Violated;
                    out.violation = {{}, y, w, y_part};
                    keep_going = false;
                    return false;
                }
                return true;
            }

            if (out.lp_calls >= budget.max_lp_calls) {
                exhausted = true;
                keep_going = false;
                return false;
            }
            ++out.lp_calls;

            HPolyhedron P(static_cast<int>(k));
            for (int i = 0; i < t.n; ++i) {
                RatVec row(k);
                for (size_t j = 0; j < k; ++j) row[j] = t.cont_cols[j][i];
                P.add_row(row, d[i]);
                P.add_row(scale(Rat(-1), row), Rat(-d[i]));
            }
            for (size_t j = 0; j < k; ++j) {
                RatVec e = zero_vec(static_cast<int>(k));
                e[j] = -1;
                P.add_row(e, Rat(0));
            }
            LpResult r = lp_solve(cut.s_coeffs, P);
            if (r.status == LpStatus::Infeasible) return true;
            if (r.status == LpStatus::Unbounded) {
                out.kind = VerdictKind::Violated;
                out.violation = {{}, y, w, Rat(0)};
                keep_going = false;
                return false;
            }
            Rat lhs = Rat(r.value + y_part);
            if (lhs < 1) {
                out.kind = VerdictKind::Violated;
                out.violation = {r.point, y, w, lhs};
                keep_going = false;
                return false;
            }
            return true;
        });
        return keep_going;
    });

    if (exhausted && out.kind != VerdictKind::Violated)
        out.kind = VerdictKind::BudgetExhausted;
    return out;
}

bool sfree_equivalence_check(const SFreeScene& scene) {
    if (!bounded(scene.K))
        fail(Err::UnboundedInput, "sfree_equivalence_check needs bounded K");

    SFreeVerdict sf = is_s_free(scene.K, scene.S, scene.window);

    // Candidate S-points: lattice translates within the bounding box of K
    // (everything further out satisfies psi >= 1 trivially).
    CoordBounds cb = coordinate_bounds(scene.K);
    std::vector<long> lo(scene.S.n), hi(scene.S.n);
    for (int j = 0; j < scene.S.n; ++j) {
        lo[j] = ceil_int(Rat(*cb.lower[j] - scene.S.b[j])).get_si();
        hi[j] = floor_int(Rat(*cb.upper[j] - scene.S.b[j])).get_si();
        if (lo[j] > hi[j]) return sf.is_free;  // no candidates at all
    }

    MaxForm psi = gauge_from_polyhedron(scene.K);
    bool all_valid = true;
    for_each_box(IntBox(lo, hi), [&](const std::vector<long>& z) {
        RatVec sigma(scene.S.n);
        for (int j = 0; j < scene.S.n; ++j)
            sigma[j] = Rat(scene.S.b[j] + Rat(z[j]));
        if (!scene.S.contains(sigma)) return true;

        CornerTableau t;
        t.n = scene.S.n;
        t.b = scene.S.b;
        t.cont_cols = {sigma};
        Cut cut;
        cut.s_coeffs = {eval(psi, sigma)};

        EnumBudget budget;
        budget.y_box = IntBox({}, {});
        budget.w_box = IntBox(std::vector<long>(scene.S.n, -3),
                              std::vector<long>(scene.S.n, 3));
        ValidityVerdict v = cut_validity_bruteforce(cut, t, budget);
        if (v.kind == VerdictKind::Violated) {
            all_valid = false;
            return false;
        }
        return true;
    });
    return all_valid == sf.is_free;
}

bool minimality_probe(const PwlPeriodic1D& pi, const Rat& b, const Rat& p0,
                      const Rat& delta, const EnumBudget& budget) {
    if (delta < 0) fail(Err::BadParams, "delta must be nonnegative");
    MinimalityReport report = check_minimal(pi, b);
    if (!report.minimal)
        fail(Err::BadParams, "minimality_probe needs a minimal pi");
    if (delta == 0) return false;

    // Lower pi at p0, re-interpolating on the incident cells.
    Rat q = frac(p0);
    RatVec bps, vals;
    bool inserted = false;
    for (size_t i = 0; i < pi.breakpoints.size(); ++i) {
        if (!inserted && pi.breakpoints[i] > q) {
            bps.push_back(q);
            vals.push_back(Rat(eval(pi, q) - delta));
            inserted = true;
        }
        bps.push_back(pi.breakpoints[i]);
        if (pi.breakpoints[i] == q) {
            vals.push_back(Rat(pi.values[i] - delta));
            inserted = true;
        } else {
            vals.push_back(pi.values[i]);
        }
    }
    if (!inserted) {
        bps.push_back(q);
        vals.push_back(Rat(eval(pi, q) - delta));
    }
    PwlPeriodic1D lowered = {bps, vals};

    // Columns: breakpoints of the lowered function plus the symmetry mate.
    std::vector<Rat> cols(lowered.breakpoints.begin(),
                          lowered.breakpoints.end());
    cols.push_back(frac(Rat(b - q)));
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    IntBox y_box(std::vector<long>(cols.size(), 0),
                 std::vector<long>(cols.size(),
                                   budget.y_box.upper.empty()
                                       ? 3
                                       : budget.y_box.upper[0]));
    long iterations = 0;
    bool violated = false;
    for_each_box(y_box, [&](const std::vector<long>& y) {
        if (++iterations > budget.max_lp_calls) return false;
        Rat target(0);
        Rat lhs(0);
        bool any = false;
        for (size_t j = 0; j < cols.size(); ++j) {
            if (y[j] == 0) continue;
            any = true;
            target += cols[j] * Rat(y[j]);
            lhs += eval(lowered, cols[j]) * Rat(y[j]);
        }
        if (!any) return true;
        if (!is_integer(Rat(target - b))) return true;  // not in b + Z
        if (lhs < 1) {
            violated = true;
            return false;
        }
        return true;
    });
    return violated;
}

}  // namespace latcut
