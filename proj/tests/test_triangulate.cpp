#include "doctest.h"

#include <algorithm>

#include "amplifiber/errors.hpp"
#include "amplifiber/triangulate.hpp"

using namespace amplifiber;

namespace {

RaySystem quadrant() {
    RaySystem rs;
    rs.r = 2;
    rs.rays = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    return rs;
}

FiberFrame seeded_frame(int n, int m, int k, uint64_t seed) {
    Instance inst = build_Z_moment_curve(n, m, k);
    Rng rng(seed);
    Mat c = sample_positive_C(k, n, rng);
    Mat y = amplituhedron_map(c, inst);
    return fiber_frame(inst, y, c);
}

} // namespace

TEST_CASE("triangulation_from_chamber") {
    Instance inst = build_Z_moment_curve(5, 2, 1);
    ChamberFan fan = enumerate_chambers(secondary_fan_polytope(inst));
    Triangulation t = triangulation_from_chamber(fan, 2);
    CHECK(t.source_chamber == 2);
    CHECK(t.cells == fan.chambers[2].cones);
    CHECK_THROWS_AS(static_cast<void>(triangulation_from_chamber(fan, 5)),
                    ValidationError);
    CHECK_THROWS_AS(static_cast<void>(triangulation_from_chamber(fan, -1)),
                    ValidationError);
}

TEST_CASE("parity pairing of triangulations") {
    Instance poly = build_Z_moment_curve(6, 2, 1);
    Instance conj = build_Z_moment_curve(6, 2, 3);
    ChamberFan pfan = enumerate_chambers(secondary_fan_polytope(poly));

    FiberFrame cframe = seeded_frame(6, 2, 3, 7);
    ChamberFan cfan = enumerate_chambers(rays_from_frame(cframe));

    for (int i = 0; i < static_cast<int>(pfan.chambers.size()); ++i) {
        Triangulation t = triangulation_from_chamber(pfan, i);
        Triangulation dual = parity_dual(t, poly, conj);
        CHECK(dual.cells == t.cells);

        // the transferred cell list is a chamber pattern on the other side
        bool found = false;
        for (const auto& ch : cfan.chambers) {
            if (ch.cones == dual.cells) {
                found = true;
            }
        }
        CHECK(found);

        Triangulation back = parity_dual(dual, conj, poly);
        CHECK(back.cells == t.cells);
    }

    Triangulation t0 = triangulation_from_chamber(pfan, 0);
    CHECK_THROWS_AS(static_cast<void>(parity_dual(t0, poly, poly)),
                    ValidationError);
    Instance other = build_Z_moment_curve(5, 2, 2);
    CHECK_THROWS_AS(static_cast<void>(parity_dual(t0, poly, other)),
                    ValidationError);
    Triangulation bad = t0;
    bad.cells.push_back({1, 2});
    CHECK_THROWS_AS(static_cast<void>(parity_dual(bad, poly, conj)),
                    ValidationError);
}

TEST_CASE("weak cone membership") {
    RaySystem rs = quadrant();
    CHECK(weak_cone_member(rs, {1, 2}, {Rat(1), Rat(1)}));
    CHECK(weak_cone_member(rs, {1, 2}, {Rat(1), Rat(0)}));
    CHECK(weak_cone_member(rs, {1}, {Rat(2), Rat(0)}));
    CHECK_FALSE(weak_cone_member(rs, {1}, {Rat(2), Rat(1)}));
    CHECK_FALSE(weak_cone_member(rs, {1, 2}, {Rat(-1), Rat(0)}));
    CHECK_FALSE(weak_cone_member(rs, {2}, {Rat(1), Rat(1)}));
    CHECK_THROWS_AS(static_cast<void>(weak_cone_member(rs, {1}, {Rat(1)})),
                    ValidationError);
}

TEST_CASE("coarse dissection at a ray of the pentagon fan") {
    Instance inst = build_Z_moment_curve(5, 2, 1);
    RaySystem rs = secondary_fan_polytope(inst);

    // the second kernel column lies on the shared ray of two chambers; the
    // coarse cover is the ray itself plus the one opposite cone
    std::vector<IndexSet> diss = dissection_from_cone(rs, rs.rays[1]);
    CHECK(diss == std::vector<IndexSet>{{2}, {4, 5}});

    CHECK_THROWS_AS(
        static_cast<void>(dissection_from_cone(rs, {Rat(0), Rat(0)})),
        ValidationError);
}

TEST_CASE("dissection at a generic point refines to its chamber") {
    Instance inst = build_Z_moment_curve(5, 2, 1);
    RaySystem rs = secondary_fan_polytope(inst);
    ChamberFan fan = enumerate_chambers(rs);
    for (const auto& ch : fan.chambers) {
        CHECK(dissection_from_cone(rs, ch.witness) == ch.cones);
    }
}
