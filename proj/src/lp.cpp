#include <algorithm>
#include <vector>

#include "latcut/error.hpp"
#include "latcut/exactgeo.hpp"

namespace latcut {

namespace {

// Dense rational simplex over the standard form
//   A z = rhs,  z >= 0,
// obtained from  a_i . x <= b_i  by splitting x = u - v and adding one slack
// per row (rows with negative rhs are negated and get a phase-1 artificial).
// Bland's rule on both pivot choices makes the method deterministic and
// cycling-free.
struct Tableau {
    int num_rows = 0;
    int num_cols = 0;
    std::vector<std::vector<Rat>> body;  // num_rows x num_cols
    std::vector<Rat> rhs;                // >= 0 throughout
    std::vector<int> basis;              // variable index per row

    void pivot(int row, int col) {
        Rat inv = Rat(1) / body[row][col];
        for (int j = 0; j < num_cols; ++j) body[row][j] = Rat(body[row][j] * inv);
        rhs[row] = Rat(rhs[row] * inv);
        for (int i = 0; i < num_rows; ++i) {
            if (i == row || body[i][col] == 0) continue;
            Rat f = body[i][col];
            for (int j = 0; j < num_cols; ++j)
                body[i][j] -= f * body[row][j];
            rhs[i] -= f * rhs[row];
        }
        basis[row] = col;
    }
};

enum class SimplexOutcome { Optimal, Unbounded };

// Minimizes cost . z; `allowed` masks columns the entering rule may use.
SimplexOutcome run_simplex(Tableau& t, const std::vector<Rat>& cost,
                           const std::vector<bool>& allowed) {
    while (true) {
        // Multipliers y = cost restricted to the basis.
        std::vector<Rat> basic_cost(t.num_rows);
        for (int i = 0; i < t.num_rows; ++i) basic_cost[i] = cost[t.basis[i]];

        // Basic columns are unit columns, so their reduced cost is exactly 0
        // and they never enter.
        int entering = -1;
        for (int j = 0; j < t.num_cols; ++j) {
            if (!allowed[j]) continue;
            Rat reduced = cost[j];
            for (int i = 0; i < t.num_rows; ++i)
                reduced -= basic_cost[i] * t.body[i][j];
            if (reduced < 0) { entering = j; break; }  // Bland: lowest index
        }
        if (entering < 0) return SimplexOutcome::Optimal;

        int leaving = -1;
        Rat best_ratio;
        for (int i = 0; i < t.num_rows; ++i) {
            if (t.body[i][entering] <= 0) continue;
            Rat ratio = Rat(t.rhs[i] / t.body[i][entering]);
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) return SimplexOutcome::Unbounded;
        t.pivot(leaving, entering);
    }
}

}  // namespace

LpResult lp_solve(const RatVec& c, const HPolyhedron& P) {
    const int n = P.dim;
    if (static_cast<int>(c.size()) != n) fail(Err::DimMismatch, "lp objective");

    // Strip trivially true zero rows; a zero row with negative rhs is an
    // immediate infeasibility certificate.
    std::vector<const HalfSpace*> rows;
    for (const HalfSpace& h : P.rows) {
        if (is_zero(h.a)) {
            if (h.b < 0) return {LpStatus::Infeasible, Rat(0), {}};
            continue;
        }
        rows.push_back(&h);
    }
    const int m = static_cast<int>(rows.size());

    if (m == 0) {
        if (is_zero(c)) return {LpStatus::Optimal, Rat(0), zero_vec(n)};
        return {LpStatus::Unbounded, Rat(0), {}};
    }

    // Columns: u (n), v (n), slacks (m), artificials (#negative rhs rows).
    int num_art = 0;
    for (const HalfSpace* h : rows)
        if (h->b < 0) ++num_art;
    const int cols = 2 * n + m + num_art;

    Tableau t;
    t.num_rows = m;
    t.num_cols = cols;
    t.body.assign(m, std::vector<Rat>(cols, Rat(0)));
    t.rhs.assign(m, Rat(0));
    t.basis.assign(m, -1);

    int art = 2 * n + m;
    for (int i = 0; i < m; ++i) {
        const HalfSpace& h = *rows[i];
        Rat sign = h.b < 0 ? Rat(-1) : Rat(1);
        for (int j = 0; j < n; ++j) {
            t.body[i][j] = Rat(sign * h.a[j]);
            t.body[i][n + j] = Rat(-sign * h.a[j]);
        }
        t.body[i][2 * n + i] = sign;
        t.rhs[i] = Rat(sign * h.b);
        if (h.b < 0) {
            t.body[i][art] = 1;
            t.basis[i] = art;
            ++art;
        } else {
            t.basis[i] = 2 * n + i;
        }
    }

    std::vector<bool> allow_all(cols, true);

    if (num_art > 0) {
        std::vector<Rat> phase1_cost(cols, Rat(0));
        for (int j = 2 * n + m; j < cols; ++j) phase1_cost[j] = 1;
        run_simplex(t, phase1_cost, allow_all);

        Rat infeas(0);
        for (int i = 0; i < m; ++i)
            if (t.basis[i] >= 2 * n + m) infeas += t.rhs[i];
        if (infeas > 0) return {LpStatus::Infeasible, Rat(0), {}};

        // Drive any artificial still basic (at value 0) out of the basis.
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < 2 * n + m) continue;
            int col = -1;
            for (int j = 0; j < 2 * n + m; ++j) {
                if (t.body[i][j] != 0) { col = j; break; }
            }
            if (col >= 0) t.pivot(i, col);
            // else: redundant row, harmless to leave in place.
        }
    }

    std::vector<Rat> cost(cols, Rat(0));
    for (int j = 0; j < n; ++j) {
        cost[j] = c[j];
        cost[n + j] = Rat(-c[j]);
    }
    std::vector<bool> allowed(cols, true);
    for (int j = 2 * n + m; j < cols; ++j) allowed[j] = false;

    SimplexOutcome outcome = run_simplex(t, cost, allowed);
    if (outcome == SimplexOutcome::Unbounded)
        return {LpStatus::Unbounded, Rat(0), {}};

    RatVec z(cols, Rat(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] >= 0) z[t.basis[i]] = t.rhs[i];
    RatVec x(n);
    Rat value(0);
    for (int j = 0; j < n; ++j) {
        x[j] = Rat(z[j] - z[n + j]);
        value += c[j] * x[j];
    }
    return {LpStatus::Optimal, value, x};
}

LpResult lp_min(const RatVec& c, const HPolyhedron& P) {
    LpResult r = lp_solve(c, P);
    if (r.status == LpStatus::Infeasible)
        fail(Err::EmptyPolyhedron, "lp_min over empty polyhedron");
    return r;
}

bool feasible(const HPolyhedron& P) {
    return lp_solve(zero_vec(P.dim), P).status != LpStatus::Infeasible;
}

bool bounded(const HPolyhedron& P) {
    RatVec c = zero_vec(P.dim);
    for (int j = 0; j < P.dim; ++j) {
        c[j] = 1;
        if (lp_solve(c, P).status == LpStatus::Unbounded) return false;
        c[j] = -1;
        if (lp_solve(c, P).status == LpStatus::Unbounded) return false;
        c[j] = 0;
    }
    return true;
}

std::optional<RatVec> interior_point(const HPolyhedron& P) {
    // max t : a_i . x + t <= b_i, t <= 1  (cap keeps the LP bounded).
    HPolyhedron lifted(P.dim + 1);
    for (const HalfSpace& h : P.rows) {
        RatVec a = h.a;
        a.push_back(Rat(1));
        lifted.add_row(a, h.b);
    }
    RatVec cap = zero_vec(P.dim + 1);
    cap[P.dim] = 1;
    lifted.add_row(cap, Rat(1));

    RatVec c = zero_vec(P.dim + 1);
    c[P.dim] = -1;
    LpResult r = lp_solve(c, lifted);
    if (r.status != LpStatus::Optimal) return std::nullopt;
    if (r.point[P.dim] <= 0) return std::nullopt;
    RatVec x(r.point.begin(), r.point.end() - 1);
    return x;
}

CoordBounds coordinate_bounds(const HPolyhedron& P) {
    CoordBounds out;
    out.lower.resize(P.dim);
    out.upper.resize(P.dim);
    RatVec c = zero_vec(P.dim);
    for (int j = 0; j < P.dim; ++j) {
        c[j] = 1;
        LpResult lo = lp_min(c, P);
        if (lo.status == LpStatus::Optimal) out.lower[j] = lo.value;
        c[j] = -1;
        LpResult hi = lp_min(c, P);
        if (hi.status == LpStatus::Optimal) out.upper[j] = Rat(-hi.value);
        c[j] = 0;
    }
    return out;
}

}  // namespace latcut
