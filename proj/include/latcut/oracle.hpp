#ifndef LATCUT_ORACLE_HPP
#define LATCUT_ORACLE_HPP

#include <optional>
#include <vector>

#include "latcut/cgf.hpp"
#include "latcut/exactgeo.hpp"
#include "latcut/groupfn.hpp"
#include "latcut/latticefree.hpp"

namespace latcut {

struct EnumBudget {
    IntBox y_box;       // integer variable ranges (clamped to >= 0)
    IntBox w_box;       // lattice target window for b + w
    long max_lp_calls = 100000;
};

enum class VerdictKind { ValidWithinBudget, Violated, BudgetExhausted };

struct ViolationPoint {
    RatVec s;
    std::vector<long> y;
    std::vector<long> w;
    Rat lhs;  // cut left-hand side < 1 at the violation
};

struct ValidityVerdict {
    VerdictKind kind = VerdictKind::ValidWithinBudget;
    std::optional<ViolationPoint> violation;
    long lp_calls = 0;
};

// Ground truth by enumeration: for every y in the box and target b + w,
// solves the exact LP  min sum cut.s_coeffs s : Rs = b + w - Py, s >= 0,
// and reports the lexicographically first violation of lhs >= 1.
ValidityVerdict cut_validity_bruteforce(const Cut& cut, const CornerTableau& t,
                                        const EnumBudget& budget);

// Agreement bit between is_s_free and the brute-force validity of the pure
// gauge cut over canonical single-column tableaus R = [sigma] for S-points
// sigma near K.
bool sfree_equivalence_check(const SFreeScene& scene);

// Lowers pi at p0 by delta (re-interpolating the incident cells) and
// searches the pure integer model for a validity violation. A true outcome
// corroborates minimality at p0.
bool minimality_probe(const PwlPeriodic1D& pi, const Rat& b, const Rat& p0,
                      const Rat& delta, const EnumBudget& budget);

}  // namespace latcut

#endif
