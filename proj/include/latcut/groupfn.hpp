#ifndef LATCUT_GROUPFN_HPP
#define LATCUT_GROUPFN_HPP

#include <optional>
#include <string>
#include <vector>

#include "latcut/exactgeo.hpp"
#include "latcut/maxform.hpp"
#include "latcut/rational.hpp"

namespace latcut {

// Continuous piecewise-linear function on R, periodic modulo 1, stored by
// its breakpoints in [0,1) (the first is always 0) and the values there.
// Between breakpoints, and from the last breakpoint back to the period end,
// the function interpolates linearly.
struct PwlPeriodic1D {
    RatVec breakpoints;
    RatVec values;
};

// Validates ordering, range and the continuity encoding (duplicated
// breakpoints would encode a jump and are rejected as NotContinuous).
PwlPeriodic1D make_pwl1d(const RatVec& breakpoints, const RatVec& values);

Rat eval(const PwlPeriodic1D& f, const Rat& x);
std::vector<Rat> slope_values(const PwlPeriodic1D& f);

// Piecewise-linear function on R^2 periodic modulo Z^2, given by affine
// cells whose union covers the closed fundamental square [0,1]^2. Cells may
// overlap only where their affine maps agree.
struct AffineCell2 {
    HPolyhedron cell;
    RatVec gradient;
    Rat offset;
};

struct PwlComplex2D {
    std::vector<AffineCell2> cells;
};

// Checks the cover (exact area of the union against the square) and
// pairwise agreement on intersections; throws NotContinuous on a mismatch.
void validate_complex(const PwlComplex2D& f);

Rat eval(const PwlComplex2D& f, const RatVec& x);
std::vector<RatVec> slope_values(const PwlComplex2D& f);

struct SubadditivityWitness {
    RatVec x, y;
    Rat violation;  // pi(x)+pi(y)-pi(x+y) < 0
};

struct MinimalityReport {
    bool zero_on_lattice = false;
    bool subadditive = false;
    bool symmetric = false;
    bool minimal = false;
    std::optional<SubadditivityWitness> subadditivity_violation;
    std::optional<RatVec> symmetry_violation;  // p with pi(p)+pi(b-p) != 1
};

// Exact minimality verdicts per the subadditivity + symmetry + lattice-zero
// characterization. Subadditivity reduces to finitely many cell-triple
// minimizations of Delta(x,y) = pi(x)+pi(y)-pi(x+y): Delta is affine on
// every cell triple, so vertex evaluation (1D) or one LP per triple (2D)
// decides the sign exactly.
MinimalityReport check_minimal(const PwlPeriodic1D& pi, const Rat& b);
MinimalityReport check_minimal(const PwlComplex2D& pi, const RatVec& b);

// E(pi) within [0,1)^2 as polyhedral faces (full cells where Delta vanishes
// identically, otherwise their Delta=0 sections).
std::vector<HPolyhedron> additivity_domain(const PwlPeriodic1D& pi);

struct ExtremeCertificate {
    bool extreme = false;
    int slope_count = 0;
    std::vector<std::string> failed_hypotheses;  // empty iff certified
    MinimalityReport minimality;
};

// Two-slope certificate (n=1): minimal + continuous PWL + exactly two
// gradient values imply extremality. A refusal is not a proof of
// non-extremality.
ExtremeCertificate certify_two_slope_extreme(const PwlPeriodic1D& pi,
                                             const Rat& b);

// (n+1)-slope certificate for n=2: minimal, at most 3 slopes, and genuinely
// 2-dimensional (certified via gradients spanning R^2).
ExtremeCertificate certify_nplus1_hypotheses(const PwlComplex2D& pi,
                                             const RatVec& b);

// psi(r) = limsup_{h->0+} pi(hr)/h. For PWL pi with pi(0)=0 this is the
// exact one-sided directional derivative at the origin, assembled from the
// gradients of the cells incident to the lattice points of the period.
MaxForm psi_from_pi(const PwlPeriodic1D& pi);
MaxForm psi_from_pi(const PwlComplex2D& pi);

}  // namespace latcut

#endif
