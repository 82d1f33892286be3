#ifndef LATCUT_CGF_HPP
#define LATCUT_CGF_HPP

#include <string>
#include <utility>
#include <vector>

#include "latcut/groupfn.hpp"
#include "latcut/latticefree.hpp"
#include "latcut/maxform.hpp"

namespace latcut {

// Gauge of a maximal (b+Z^n)-free K normalized to rhs 1; requires rec(K) to
// have empty interior, otherwise only smallest_representation applies.
MaxForm gauge_from_polyhedron(const HPolyhedron& K);

// Support function of the smallest prepolar (may take negative values).
MaxForm smallest_representation(const HPolyhedron& K);

// Corner relaxation data: columns r of R (continuous) and p of P (integer)
// with Rs + Py in b + Z^n.
struct CornerTableau {
    int n = 0;
    RatVec b;
    std::vector<RatVec> cont_cols;
    std::vector<RatVec> int_cols;
};

// One tableau row x_B + sum coeffs * nonbasic = rhs.
struct TableauRow {
    std::string basic_name;
    bool basic_is_integer = true;
    Rat rhs;
    RatVec coeffs;  // aligned with SimplexTableau::columns
};

struct SimplexTableau {
    struct Column {
        std::string name;
        bool is_integer = false;
    };
    std::vector<Column> columns;
    std::vector<TableauRow> rows;
};

// Keeps the integer basic rows, drops their nonnegativity, and splits the
// nonbasic columns into R (continuous) and P (integer).
CornerTableau corner_from_tableau(const SimplexTableau& t);

// Cut sum psi(r) s_r + sum pi(p) y_p >= 1 (the rhs is fixed at 1 by the
// model normalization).
struct Cut {
    RatVec s_coeffs;
    RatVec y_coeffs;
};

// Gauge coefficients for continuous columns and trivial-lifting coefficients
// for integer columns, from a verified maximal S-free scene recentred so
// that 0 is interior to K and S = b + Z^n matches the tableau's b.
Cut cut_from_set(const CornerTableau& t, const SFreeScene& scene);

// The GMI pair for one row with fractional rhs f: psi(r) = max{r/f, -r/(1-f)}
// and pi(p) = min(frac(p)/f, (1-frac(p))/(1-f)).
std::pair<MaxForm, PwlPeriodic1D> gmi_split_1d(const Rat& f);

}  // namespace latcut

#endif
