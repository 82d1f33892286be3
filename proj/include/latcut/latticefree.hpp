#ifndef LATCUT_LATTICEFREE_HPP
#define LATCUT_LATTICEFREE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcut/exactgeo.hpp"
#include "latcut/rational.hpp"

namespace latcut {

// S = (b + Z^n) ∩ Q with Q an optional rational polyhedron. 0 ∉ S always.
struct SSpec {
    int n = 0;
    RatVec b;
    std::optional<HPolyhedron> Q;

    // Membership of x in S, the lattice part decided exactly.
    bool contains(const RatVec& x) const;
};

// Validates the invariants: dimensions agree, 0 ∉ S, and S nonempty within
// the window when Q is present.
SSpec make_sspec(int n, const RatVec& b,
                 const std::optional<HPolyhedron>& Q = std::nullopt,
                 const IntBox* nonempty_window = nullptr);

struct FacetWitness {
    int facet = -1;   // row index into the irredundant description
    RatVec point;     // S-point in the facet's relative interior
};

struct SFreeScene {
    SSpec S;
    HPolyhedron K;             // stored irredundant
    IntBox window;
    bool verified_maximal = false;
    std::vector<FacetWitness> certificates;
};

struct SFreeVerdict {
    bool is_free = false;
    std::optional<RatVec> violation;  // S-point in int(K) when not free
};

// True iff int(K) contains no point of S. Bounded parts are enumerated over
// the window after an exact coverage check; lineality directions of K ∩ Q
// are quotiented out by periodicity, which keeps the verdict complete.
SFreeVerdict is_s_free(const HPolyhedron& K, const SSpec& S,
                       const IntBox& window);

struct MaximalVerdict {
    bool maximal = false;
    std::vector<FacetWitness> witnesses;       // one per facet when maximal
    std::optional<RatVec> interior_violation;  // set when not even S-free
    std::string reason;                        // diagnostic when not maximal
};

// Facet-relint witness test for maximality of a full-dimensional S-free K,
// plus the recession conditions that make the witness criterion sufficient.
MaximalVerdict is_maximal_s_free(const HPolyhedron& K, const SSpec& S,
                                 const IntBox& window);

enum class Class2DTag {
    Split,
    Type1Triangle,
    Type2Triangle,
    Type3Triangle,
    Quadrilateral,
};

const char* class2d_name(Class2DTag tag);

struct Class2D {
    Class2DTag tag;
    std::vector<FacetWitness> witnesses;
    // For Type1: the unimodular matrix U with K = U conv{0,2e1,2e2} + v0.
    std::optional<RatMat> unimodular_map;
};

// Classifies a verified maximal (b+Z^2)-free set into the five types.
// Q must be absent. Raises NotMaximal when verification fails and
// NotClassifiable when the witness structure matches no type.
Class2D classify_2d(const HPolyhedron& K, const SSpec& S, const IntBox& window);

struct CanonicalParams {
    uint64_t seed = 0;
    // Split only: the primitive integer facet normal (default e1).
    std::optional<RatVec> split_normal;
};

// Constructs a verified scene of the requested type with 0 in int(K).
// The seed drives rational parameter draws; every returned scene has been
// re-verified through is_maximal_s_free.
SFreeScene make_canonical(Class2DTag kind, const CanonicalParams& params = {});

// Irredundant facet count <= 2^n (Doignon / Bell / Scarf bound).
bool doignon_check(const HPolyhedron& K);

struct MinkowskiResult {
    bool found = false;
    RatVec point;   // nonzero integer point of C when found
    Rat volume;     // exact area for n = 2, length for n = 1
};

// For compact C centrally symmetric about 0 with vol(C) >= 2^n a nonzero
// integer point exists; this searches for one and reports the exact volume.
MinkowskiResult minkowski_check(const HPolyhedron& C, const IntBox& window);

// {x : a U^{-1} (x - z) <= b}: the image of K under x -> U x + z.
HPolyhedron transform_polyhedron(const HPolyhedron& K, const RatMat& U,
                                 const RatVec& z);

// Random unimodular matrix with small entries (product of elementary shears
// and swaps), deterministic in the seed.
RatMat random_unimodular_2d(uint64_t seed);

}  // namespace latcut

#endif
