#include "doctest.h"
#include "latcut/cgf.hpp"
#include "latcut/error.hpp"
#include "latcut/lifting.hpp"
#include "latcut/oracle.hpp"

using namespace latcut;

namespace {

SFreeScene split_scene_1d() {
    SFreeScene scene;
    scene.S = make_sspec(1, rat_vec({rat(2, 5)}));
    HPolyhedron K(1);
    K.add_row(vec({1}), rat(2, 5));
    K.add_row(vec({-1}), rat(3, 5));
    scene.K = K;
    scene.window = IntBox::cube(1, 10);
    return scene;
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

EnumBudget budget_1d() {
    EnumBudget b;
    b.y_box = IntBox({0}, {5});
    b.w_box = IntBox({-5}, {5});
    return b;
}

}  // namespace

TEST_CASE("GMI cut is valid on its own tableau") {
    SFreeScene scene = split_scene_1d();
    CornerTableau t;
    t.n = 1;
    t.b = rat_vec({rat(2, 5)});
    t.cont_cols = {vec({1}), vec({-1})};
    t.int_cols = {rat_vec({rat(1, 5)})};
    Cut cut = cut_from_set(t, scene);

    ValidityVerdict v = cut_validity_bruteforce(cut, t, budget_1d());
    CHECK(v.kind == VerdictKind::ValidWithinBudget);
    CHECK(v.lp_calls > 0);
}

TEST_CASE("a cut from a non-S-free K is violated with a witness") {
    HPolyhedron box(2);
    box.add_row(vec({1, 0}), Rat(1));
    box.add_row(vec({-1, 0}), Rat(1));
    box.add_row(vec({0, 1}), Rat(1));
    box.add_row(vec({0, -1}), Rat(1));
    MaxForm psi = gauge_from_polyhedron(box);  // NOT S-free for b=(1/2,1/2)

    CornerTableau t;
    t.n = 2;
    t.b = rat_vec({rat(1, 2), rat(1, 2)});
    t.cont_cols = {rat_vec({rat(1, 2), rat(1, 2)})};
    Cut cut;
    cut.s_coeffs = {eval(psi, t.cont_cols[0])};
    CHECK(cut.s_coeffs[0] == rat(1, 2));  // psi(b) < 1 certifies the failure

    EnumBudget budget;
    budget.y_box = IntBox({}, {});
    budget.w_box = IntBox::cube(2, 5);
    ValidityVerdict v = cut_validity_bruteforce(cut, t, budget);
    CHECK(v.kind == VerdictKind::Violated);
    REQUIRE(v.violation.has_value());
    CHECK(v.violation->lhs < 1);
}

TEST_CASE("vacuous enumeration is valid within budget") {
    CornerTableau t;
    t.n = 1;
    t.b = rat_vec({rat(2, 5)});
    t.cont_cols = {vec({0})};  // 0 column can never reach b + w
    Cut cut;
    cut.s_coeffs = {Rat(0)};
    EnumBudget b;
    b.y_box = IntBox({}, {});
    b.w_box = IntBox({-3}, {3});
    ValidityVerdict v = cut_validity_bruteforce(cut, t, b);
    CHECK(v.kind == VerdictKind::ValidWithinBudget);
}

TEST_CASE("budget exhaustion is reported, never silently truncated") {
    SFreeScene scene = split_scene_1d();
    CornerTableau t;
    t.n = 1;
    t.b = rat_vec({rat(2, 5)});
    t.cont_cols = {vec({1})};
    t.int_cols = {rat_vec({rat(1, 5)})};
    Cut cut = cut_from_set(t, scene);
    EnumBudget b = budget_1d();
    b.max_lp_calls = 3;
    ValidityVerdict v = cut_validity_bruteforce(cut, t, b);
    CHECK(v.kind == VerdictKind::BudgetExhausted);
    CHECK(v.lp_calls <= 3);
}

TEST_CASE("violations are monotone in the budget") {
    // A deliberately weak cut: halve the GMI coefficients.
    SFreeScene scene = split_scene_1d();
    CornerTableau t;
    t.n = 1;
    t.b = rat_vec({rat(2, 5)});
    t.cont_cols = {vec({1})};
    Cut weak;
    weak.s_coeffs = {rat(5, 4)};  // psi would give 5/2

    EnumBudget small;
    small.y_box = IntBox({}, {});
    small.w_box = IntBox({0}, {0});
    ValidityVerdict v1 = cut_validity_bruteforce(weak, t, small);
    CHECK(v1.kind == VerdictKind::Violated);

    EnumBudget big;
    big.y_box = IntBox({}, {});
    big.w_box = IntBox({-5}, {5});
    ValidityVerdict v2 = cut_validity_bruteforce(weak, t, big);
    CHECK(v2.kind == VerdictKind::Violated);
}

TEST_CASE("sfree equivalence on free and non-free scenes") {
    CHECK(sfree_equivalence_check(split_scene_1d()));
    CHECK(sfree_equivalence_check(diamond_scene()));

    SFreeScene bad;
    bad.S = make_sspec(2, rat_vec({rat(1, 2), rat(1, 2)}));
    HPolyhedron box(2);
    box.add_row(vec({1, 0}), Rat(1));
    box.add_row(vec({-1, 0}), Rat(1));
    box.add_row(vec({0, 1}), Rat(1));
    box.add_row(vec({0, -1}), Rat(1));
    bad.K = box;
    bad.window = IntBox::cube(2, 10);
    CHECK(sfree_equivalence_check(bad));  // both sides agree: not free
}

TEST_CASE("minimality_probe detects the symmetry response") {
    PwlPeriodic1D pi = gmi_split_1d(rat(2, 5)).second;
    EnumBudget b = budget_1d();
    CHECK(minimality_probe(pi, rat(2, 5), rat(1, 5), rat(1, 10), b));
    CHECK(minimality_probe(pi, rat(2, 5), rat(3, 10), rat(1, 20), b));
    CHECK(!minimality_probe(pi, rat(2, 5), rat(1, 5), Rat(0), b));

    PwlPeriodic1D saw =
        make_pwl1d({Rat(0), rat(1, 2)}, {Rat(0), rat(1, 2)});
    CHECK_THROWS_AS(minimality_probe(saw, rat(2, 5), rat(1, 5), rat(1, 10), b),
                    LatcutError);
}

TEST_CASE("oracle agreement across 20 seeded scenes per bounded type") {
    for (Class2DTag tag :
         {Class2DTag::Type1Triangle, Class2DTag::Type2Triangle,
          Class2DTag::Type3Triangle, Class2DTag::Quadrilateral}) {
        for (uint64_t seed = 100; seed < 120; ++seed) {
            CanonicalParams params;
            params.seed = seed;
            SFreeScene scene = make_canonical(tag, params);
            CHECK(sfree_equivalence_check(scene));
        }
    }
}
