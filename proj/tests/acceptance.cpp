// Acceptance suite: one line per criterion, zero-tolerance exact checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "latcut/cgf.hpp"
#include "latcut/error.hpp"
#include "latcut/exactgeo.hpp"
#include "latcut/groupfn.hpp"
#include "latcut/latticefree.hpp"
#include "latcut/lifting.hpp"
#include "latcut/oracle.hpp"

using namespace latcut;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    double limit_seconds;  // 0 = no limit
};

void report(const Criterion& c, bool ok, double seconds,
            const std::string& detail) {
    bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    bool pass = ok && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %s (%.2f s%s)%s%s\n", pass ? "PASS" : "FAIL",
                c.name.c_str(), seconds,
                c.limit_seconds > 0 && !in_time ? ", over limit" : "",
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
}

void run(const Criterion& c, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report(c, ok, seconds, detail);
}

HPolyhedron wedge() {
    HPolyhedron P(2);
    P.add_row(vec({1, 0}), Rat(1));
    P.add_row(vec({0, 1}), Rat(1));
    P.add_row(rat_vec({rat(-1, 2), rat(1, 2)}), Rat(1));
    return P;
}

SFreeScene diamond_scene() {
    SFreeScene scene;
    scene.S = make_sspec(2, rat_vec({rat(1, 2), rat(1, 2)}));
    HPolyhedron diamond(2);
    diamond.add_row(vec({1, 1}), Rat(1));
    diamond.add_row(vec({1, -1}), Rat(1));
    diamond.add_row(vec({-1, 1}), Rat(1));
    diamond.add_row(vec({-1, -1}), Rat(1));
    scene.K = diamond;
    scene.window = IntBox::cube(2, 10);
    return scene;
}

SFreeScene split_scene_2d() {
    SFreeScene scene;
    scene.S = make_sspec(2, rat_vec({rat(2, 5), rat(1, 3)}));
    HPolyhedron strip(2);
    strip.add_row(vec({1, 0}), rat(2, 5));
    strip.add_row(vec({-1, 0}), rat(3, 5));
    scene.K = strip;
    scene.window = IntBox::cube(2, 10);
    return scene;
}

std::vector<Class2DTag> all_tags() {
    return {Class2DTag::Split, Class2DTag::Type1Triangle,
            Class2DTag::Type2Triangle, Class2DTag::Type3Triangle,
            Class2DTag::Quadrilateral};
}

// Rational lower bound on sqrt(x) for x > 0.
Rat floor_sqrt(const Rat& x) {
    Int num_root = sqrt(Int(x.get_num()));
    Int den_root = sqrt(Int(x.get_den()));
    Rat r(num_root, den_root + 1);
    r.canonicalize();
    return r;
}

bool criterion_wedge(std::string& detail) {
    MaxForm mu = smallest_representation(wedge());
    std::vector<RatVec> expect = {rat_vec({rat(-1, 2), rat(1, 2)}),
                                  vec({0, 1}), vec({1, 0})};
    if (mu.rows != expect) {
        detail = "prepolar rows differ";
        return false;
    }
    if (eval(mu, vec({-2, -4})) != -1) {
        detail = "mu_K((-2,-4)) != -1";
        return false;
    }
    return true;
}

bool criterion_five_type(std::string& detail) {
    for (Class2DTag tag : all_tags()) {
        for (uint64_t seed = 0; seed < 100; ++seed) {
            CanonicalParams params;
            params.seed = seed;
            SFreeScene scene = make_canonical(tag, params);
            MaximalVerdict mv =
                is_maximal_s_free(scene.K, scene.S, scene.window);
            if (!mv.maximal) {
                detail = std::string(class2d_name(tag)) + " seed " +
                         std::to_string(seed) + " not maximal";
                return false;
            }
            Class2D cls = classify_2d(scene.K, scene.S, scene.window);
            if (cls.tag != tag) {
                detail = std::string(class2d_name(tag)) + " seed " +
                         std::to_string(seed) + " classified as " +
                         class2d_name(cls.tag);
                return false;
            }
        }
    }
    return true;
}

bool criterion_doignon(std::string& detail) {
    // 2D corpus: canonical scenes across all types and seeds.
    for (Class2DTag tag : all_tags()) {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            CanonicalParams params;
            params.seed = seed;
            SFreeScene scene = make_canonical(tag, params);
            if (!doignon_check(scene.K)) {
                detail = std::string("facet bound violated for ") +
                         class2d_name(tag);
                return false;
            }
        }
    }
    // The diamond attains 4 = 2^2 facets.
    SFreeScene diamond = diamond_scene();
    if (irredundant_hrep(diamond.K).rows.size() != 4) {
        detail = "diamond does not attain the bound";
        return false;
    }
    MaximalVerdict dm = is_maximal_s_free(diamond.K, diamond.S, diamond.window);
    if (!dm.maximal || !doignon_check(diamond.K)) {
        detail = "diamond not verified";
        return false;
    }

    // 3D corpus: unimodular images of conv{0, 3e^1, 3e^2, 3e^3}.
    std::vector<RatMat> mats = {RatMat::identity(3)};
    RatMat shear = RatMat::identity(3);
    shear.at(0, 1) = 1;
    mats.push_back(shear);
    RatMat mix = RatMat::identity(3);
    mix.at(1, 2) = -1;
    mix.at(0, 2) = 1;
    mats.push_back(mix);
    for (const RatMat& U : mats) {
        HPolyhedron K0 = pyramid_canonical(3, U, vec({0, 0, 0}));
        // Recentre at an interior point q and verify maximality for
        // S = frac(-q) + Z^3.
        RatVec q = zero_vec(3);
        for (const RatVec& t : {vec({0, 0, 0}), vec({3, 0, 0}), vec({0, 3, 0}),
                                vec({0, 0, 3})})
            q = add(q, mat_vec(U, t));
        q = scale(rat(1, 4), q);
        HPolyhedron K(3);
        for (const HalfSpace& h : K0.rows)
            K.add_row(h.a, Rat(h.b - dot(h.a, q)));
        RatVec b = {frac(Rat(-q[0])), frac(Rat(-q[1])), frac(Rat(-q[2]))};
        SSpec S = make_sspec(3, b);
        MaximalVerdict mv = is_maximal_s_free(K, S, IntBox::cube(3, 8));
        if (!mv.maximal) {
            detail = "3D pyramid not verified maximal";
            return false;
        }
        if (!doignon_check(K)) {
            detail = "3D pyramid violates the facet bound";
            return false;
        }
    }
    return true;
}

bool criterion_gmi(std::string& detail) {
    auto [psi, pi] = gmi_split_1d(rat(2, 5));
    MinimalityReport r = check_minimal(pi, rat(2, 5));
    if (!(r.zero_on_lattice && r.subadditive && r.symmetric && r.minimal)) {
        detail = "GMI minimality failed";
        return false;
    }
    ExtremeCertificate cert = certify_two_slope_extreme(pi, rat(2, 5));
    if (!cert.extreme || cert.slope_count != 2) {
        detail = "two-slope certificate refused";
        return false;
    }

    SFreeScene scene;
    scene.S = make_sspec(1, rat_vec({rat(2, 5)}));
    HPolyhedron K(1);
    K.add_row(vec({1}), rat(2, 5));
    K.add_row(vec({-1}), rat(3, 5));
    scene.K = K;
    scene.window = IntBox::cube(1, 10);
    MaxForm gauge = gauge_from_polyhedron(scene.K);
    TranslationGroup W = translation_group(scene.S);
    if (trivial_lifting(gauge, W, rat_vec({rat(1, 5)})).value != rat(1, 2)) {
        detail = "pi*(1/5) != 1/2";
        return false;
    }
    if (trivial_lifting(gauge, W, rat_vec({rat(4, 5)})).value != rat(1, 3)) {
        detail = "pi*(4/5) != 1/3";
        return false;
    }

    MaxForm recovered = psi_from_pi(pi);
    if (eval(recovered, vec({1})) != rat(5, 2) ||
        eval(recovered, vec({-1})) != rat(5, 3)) {
        detail = "psi_from_pi does not recover the gauge";
        return false;
    }
    return true;
}

bool covering_is(const SFreeScene& scene, bool expect_full, std::string& detail,
                 const char* label) {
    auto start = std::chrono::steady_clock::now();
    LiftingRegion region = lifting_region(scene);
    Rat fraction = covering_fraction_2d(region);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds >= 10) {
        detail = std::string(label) + " exceeded 10 s";
        return false;
    }
    if (expect_full != (fraction == 1)) {
        detail = std::string(label) + " fraction " + rat_to_string(fraction);
        return false;
    }
    if (!expect_full && !(fraction < 1 && fraction > 0)) {
        detail = std::string(label) + " fraction out of range";
        return false;
    }
    return true;
}

bool criterion_covering(std::string& detail) {
    CanonicalParams params;
    params.seed = 1;
    if (!covering_is(make_canonical(Class2DTag::Type1Triangle, params), true,
                     detail, "type1"))
        return false;
    if (!covering_is(split_scene_2d(), true, detail, "split")) return false;

    // Coproduct diamond: (K/mu) diamond (K/(1-mu)) for the 1D split K.
    HPolyhedron K1(1);
    K1.add_row(vec({1}), rat(2, 5));
    K1.add_row(vec({-1}), rat(3, 5));
    SFreeScene co;
    co.S = make_sspec(2, rat_vec({rat(2, 5), rat(2, 5)}));
    co.K = coproduct(K1, K1, rat(1, 2));
    co.window = IntBox::cube(2, 10);
    if (!covering_is(co, true, detail, "coproduct")) return false;

    params.seed = 2;
    if (!covering_is(make_canonical(Class2DTag::Type3Triangle, params), false,
                     detail, "type3"))
        return false;
    return true;
}

bool criterion_translation(std::string& detail) {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(2, 7);

    struct Case {
        Class2DTag tag;
        uint64_t seed;
        int translations;
    };
    for (const Case& c : {Case{Class2DTag::Type1Triangle, 3, 25},
                          Case{Class2DTag::Type3Triangle, 5, 25}}) {
        CanonicalParams params;
        params.seed = c.seed;
        SFreeScene scene = make_canonical(c.tag, params);
        bool base = covering_fraction_2d(lifting_region(scene)) == 1;
        int done = 0;
        while (done < c.translations) {
            RatVec t = {rat(num(rng), den(rng)), rat(num(rng), den(rng))};
            HPolyhedron Kt(2);
            for (const HalfSpace& h : scene.K.rows)
                Kt.add_row(h.a, Rat(h.b + dot(h.a, t)));
            if (!Kt.strictly_contains(zero_vec(2))) continue;
            SFreeScene moved;
            moved.S = SSpec{2, add(scene.S.b, t), std::nullopt};
            moved.K = Kt;
            moved.window = IntBox::cube(2, 14);
            bool verdict = covering_fraction_2d(lifting_region(moved)) == 1;
            if (verdict != base) {
                detail = std::string(class2d_name(c.tag)) +
                         " verdict flipped under translation " +
                         vec_to_string(t);
                return false;
            }
            ++done;
        }
    }
    return true;
}

bool criterion_validity(std::string& detail) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> n_int(1, 2);
    std::uniform_int_distribution<uint64_t> seed_draw(0, 40);

    std::vector<Class2DTag> tags = {
        Class2DTag::Type1Triangle, Class2DTag::Type2Triangle,
        Class2DTag::Type3Triangle, Class2DTag::Quadrilateral};

    for (int trial = 0; trial < 20; ++trial) {
        CanonicalParams params;
        params.seed = seed_draw(rng);
        SFreeScene scene = make_canonical(tags[trial % tags.size()], params);

        CornerTableau t;
        t.n = 2;
        t.b = scene.S.b;
        int k = 2;
        for (int j = 0; j < k; ++j) {
            RatVec col = {rat(num(rng), den(rng)), rat(num(rng), den(rng))};
            if (is_zero(col)) col = vec({1, 0});
            t.cont_cols.push_back(col);
        }
        int ell = n_int(rng);
        for (int j = 0; j < ell; ++j)
            t.int_cols.push_back(
                {rat(num(rng), den(rng)), rat(num(rng), den(rng))});

        Cut cut = cut_from_set(t, scene);
        EnumBudget budget;
        budget.y_box = IntBox(std::vector<long>(ell, 0),
                              std::vector<long>(ell, 5));
        budget.w_box = IntBox::cube(2, 5);
        budget.max_lp_calls = 2000000;
        ValidityVerdict v = cut_validity_bruteforce(cut, t, budget);
        if (v.kind != VerdictKind::ValidWithinBudget) {
            detail = "trial " + std::to_string(trial) + " cut not valid";
            return false;
        }
        if (!sfree_equivalence_check(scene)) {
            detail = "equivalence check disagreed on a free scene";
            return false;
        }
    }

    // Five deliberately non-S-free sets: oversized symmetric boxes.
    for (int i = 1; i <= 5; ++i) {
        Rat radius = Rat(1) + rat(i, 6);
        HPolyhedron box(2);
        box.add_row(vec({1, 0}), radius);
        box.add_row(vec({-1, 0}), radius);
        box.add_row(vec({0, 1}), radius);
        box.add_row(vec({0, -1}), radius);
        MaxForm psi = gauge_from_polyhedron(box);

        CornerTableau t;
        t.n = 2;
        t.b = rat_vec({rat(1, 2), rat(1, 2)});
        t.cont_cols = {rat_vec({rat(1, 2), rat(1, 2)}), vec({1, 0})};
        Cut cut;
        for (const RatVec& r : t.cont_cols) cut.s_coeffs.push_back(eval(psi, r));

        EnumBudget budget;
        budget.y_box = IntBox({}, {});
        budget.w_box = IntBox::cube(2, 5);
        ValidityVerdict v = cut_validity_bruteforce(cut, t, budget);
        if (v.kind != VerdictKind::Violated || !v.violation) {
            detail = "non-free box " + std::to_string(i) + " not violated";
            return false;
        }

        SFreeScene bad;
        bad.S = make_sspec(2, rat_vec({rat(1, 2), rat(1, 2)}));
        bad.K = box;
        bad.window = IntBox::cube(2, 10);
        if (!sfree_equivalence_check(bad)) {
            detail = "equivalence check disagreed on a non-free scene";
            return false;
        }
    }
    return true;
}

bool criterion_lifting_identities(std::string& detail) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> weight(1, 9);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<long> shift(-3, 3);

    CanonicalParams params;
    params.seed = 4;
    std::vector<SFreeScene> scenes = {
        diamond_scene(), make_canonical(Class2DTag::Type1Triangle, params),
        split_scene_2d()};

    long spindle_samples = 0;
    long periodicity_samples = 0;
    for (const SFreeScene& scene : scenes) {
        LiftingRegion region = lifting_region(scene);
        if (region.ball_radius <= 0) {
            detail = "region without a positive ball certificate";
            return false;
        }
        MaxForm psi = gauge_from_polyhedron(region.scene.K);
        TranslationGroup W = region.group;

        // The split gauge vanishes along its lineality, so trivial lifting
        // over the full W reports NonCoerciveDirection there; the sampling
        // identities run on the coercive scenes.
        if (!kernel_basis(RatMat::from_rows(psi.rows)).empty()) continue;

        // Spindle membership identity pi* = psi on T(s): random rational
        // convex combinations of spindle vertices.
        long before = spindle_samples;
        while (spindle_samples - before < 500) {
            for (const Spindle& sp : region.spindles) {
                VertexEnumResult ve = vertex_enum(sp.region);
                RatVec p = zero_vec(2);
                Rat total(0);
                for (const RatVec& v : ve.polytope.vertices) {
                    Rat w(weight(rng));
                    p = add(p, scale(w, v));
                    total += w;
                }
                p = scale(Rat(1) / total, p);
                if (trivial_lifting(psi, W, p).value != eval(psi, p)) {
                    detail = "pi* != psi at " + vec_to_string(p);
                    return false;
                }
                ++spindle_samples;
            }
        }

        // Periodicity modulo W on fresh samples.
        for (int i = 0; i < 500; ++i) {
            RatVec p = {rat(num(rng), den(rng)), rat(num(rng), den(rng))};
            RatVec w = zero_vec(2);
            for (const RatVec& basis : W.basis)
                w = add(w, scale(Rat(shift(rng)), basis));
            if (trivial_lifting(psi, W, p).value !=
                trivial_lifting(psi, W, add(p, w)).value) {
                detail = "pi* not periodic at " + vec_to_string(p);
                return false;
            }
            ++periodicity_samples;
        }
    }
    if (spindle_samples < 1000 || periodicity_samples < 1000) {
        detail = "sampled fewer than 1000 points";
        return false;
    }
    return true;
}

bool criterion_minkowski(std::string& detail) {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<int> coord(1, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        // Random symmetric polygon: pair each row with its negation.
        HPolyhedron C(2);
        int extra = trial % 3;
        auto add_pair = [&](const RatVec& a, const Rat& b) {
            C.add_row(a, b);
            C.add_row(scale(Rat(-1), a), b);
        };
        add_pair(vec({1, 0}), rat(coord(rng), den(rng)));
        add_pair(vec({0, 1}), rat(coord(rng), den(rng)));
        for (int e = 0; e < extra; ++e)
            add_pair({rat(coord(rng), den(rng)), rat(coord(rng), den(rng))},
                     Rat(coord(rng)));

        Rat area = polygon_area(C);
        if (area == 0) continue;
        if (area < 4) {
            Rat lambda = Rat(2) / floor_sqrt(area);
            HPolyhedron scaled(2);
            for (const HalfSpace& h : C.rows)
                scaled.add_row(h.a, Rat(h.b * lambda));
            C = scaled;
            area = polygon_area(C);
        }
        if (area < 4) {
            detail = "scaling failed to reach area 4";
            return false;
        }
        MinkowskiResult r = minkowski_check(C, IntBox::cube(2, 64));
        if (!r.found) {
            detail = "no nonzero integer point in trial " +
                     std::to_string(trial);
            return false;
        }
        if (!C.contains(r.point) || is_zero(r.point)) {
            detail = "bad witness in trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    run({"criterion 1: wedge smallest representation", 1.0},
        criterion_wedge);
    run({"criterion 2: five-type round trip (100 seeds per type)", 60.0},
        criterion_five_type);
    run({"criterion 3: Doignon facet bound on 2D/3D corpora", 0},
        criterion_doignon);
    run({"criterion 4: GMI pipeline at f=2/5", 0}, criterion_gmi);
    run({"criterion 5: covering verdicts (type1, split, coproduct, type3)", 40.0},
        criterion_covering);
    run({"criterion 6: translation invariance of covering verdicts", 300.0},
        criterion_translation);
    run({"criterion 7: validity oracle on seeded tableaus", 0},
        criterion_validity);
    run({"criterion 8: lifting-region identities", 0},
        criterion_lifting_identities);
    run({"criterion 9: Minkowski property test", 0}, criterion_minkowski);

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
