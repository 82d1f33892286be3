#ifndef LATCUT_LIFTING_HPP
#define LATCUT_LIFTING_HPP

#include <vector>

#include "latcut/exactgeo.hpp"
#include "latcut/groupfn.hpp"
#include "latcut/latticefree.hpp"
#include "latcut/maxform.hpp"

namespace latcut {

// W_S = {w : s + lambda w in S for all s in S, lambda in Z}; for
// S = (b+Z^n) ∩ Q this is lin(Q) ∩ Z^n, and Z^n itself when Q is absent.
struct TranslationGroup {
    int ambient = 0;
    std::vector<RatVec> basis;  // primitive integer vectors

    int rank() const { return static_cast<int>(basis.size()); }
};

TranslationGroup translation_group(const SSpec& S);

// T(s) = {r : (a_i - a_k) r <= 0, (a_i - a_k)(s - r) <= 0 for all i} built
// on the rhs-1 normalized irredundant description of K.
struct Spindle {
    HPolyhedron region;
    RatVec s;
    int facet = -1;  // k(s)
};

Spindle spindle(const SFreeScene& scene, const RatVec& s, int facet);

struct LiftingRegion {
    std::vector<Spindle> spindles;
    TranslationGroup group;
    SFreeScene scene;   // K stored rhs-1 normalized
    Rat ball_radius;    // rational eps > 0 with the l-inf ball inside the union
};

// All spindles over representatives of S ∩ K modulo L_K; points lying on
// several facets contribute one spindle per tight facet.
LiftingRegion lifting_region(const SFreeScene& scene);

struct TrivialLiftResult {
    Rat value;
    RatVec argmin_w;
    IntBox window_used;  // certifying search window in basis coordinates
};

// pi*(p) = min over w in W_S of psi(p + w), with an exact finite window
// certified from the level set {psi <= psi(p)}.
TrivialLiftResult trivial_lifting(const MaxForm& psi,
                                  const TranslationGroup& W, const RatVec& p);

// Exact area fraction of the fundamental cell covered by the spindle union
// translated by W; 1 exactly when the covering property holds. Spindles
// sharing a rank-1 lineality reduce to an interval covering along the
// transversal direction.
Rat covering_fraction_2d(const LiftingRegion& region);

// The trivial lifting as a PWL complex on the fundamental cell; requires
// covering fraction 1 (otherwise the pieces would not cover the cell).
PwlComplex2D lifting_complex(const LiftingRegion& region);

// (K1/mu) diamond (K2/(1-mu)): polar of the product of smallest prepolars.
HPolyhedron coproduct(const HPolyhedron& K1, const HPolyhedron& K2,
                      const Rat& mu);

// U conv{0, n e^1, ..., n e^n} + z for unimodular integer U and integer z.
HPolyhedron pyramid_canonical(int n, const RatMat& U, const RatVec& z);

}  // namespace latcut

#endif
