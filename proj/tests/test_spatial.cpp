#include <cmath>

#include "doctest.h"
#include "qlevr/rng.hpp"
#include "qlevr/spatial.hpp"

using namespace qlevr;

TEST_CASE("relate returns the compass sector of b relative to a") {
    const Vec2 a{0.5, 0.5};
    CHECK(relate(a, {0.9, 0.5}) == SpatialRelation::Right);
    CHECK(relate(a, {0.1, 0.5}) == SpatialRelation::Left);
    CHECK(relate(a, {0.5, 0.9}) == SpatialRelation::Front);
    CHECK(relate(a, {0.5, 0.1}) == SpatialRelation::Back);
    CHECK(relate(a, {0.8, 0.8}) == SpatialRelation::RightFront);  // 45 degrees exactly
    CHECK(relate(a, {0.2, 0.8}) == SpatialRelation::LeftFront);
    CHECK(relate(a, {0.2, 0.2}) == SpatialRelation::LeftRear);
    CHECK(relate(a, {0.8, 0.2}) == SpatialRelation::RightRear);
    CHECK_THROWS_AS(relate(a, a), CoincidentPoints);
}

TEST_CASE("sector boundaries assign to the counterclockwise sector") {
    const Vec2 origin{0.0, 0.0};
    // A hair above/below the 22.5 degree boundary between right and right-front.
    const double boundary = M_PI / 8.0;
    CHECK(relate(origin, {std::cos(boundary + 1e-9), std::sin(boundary + 1e-9)}) ==
          SpatialRelation::RightFront);
    CHECK(relate(origin, {std::cos(boundary - 1e-9), std::sin(boundary - 1e-9)}) == SpatialRelation::Right);
}

TEST_CASE("holds accepts a diagonal's cardinal components") {
    const Vec2 a{0.5, 0.5};
    const Vec2 b{0.8, 0.8};  // right-front of a
    CHECK(holds(a, b, SpatialRelation::RightFront));
    CHECK(holds(a, b, SpatialRelation::Right));
    CHECK(holds(a, b, SpatialRelation::Front));
    CHECK(!holds(a, b, SpatialRelation::Left));
    CHECK(!holds(a, b, SpatialRelation::Back));
    CHECK(!holds(a, b, SpatialRelation::LeftRear));
}

TEST_CASE("for random pairs exactly one relation is returned and holds is consistent") {
    Rng rng(20240117);
    for (int trial = 0; trial < 1000; ++trial) {
        const Vec2 a{rng.uniform(), rng.uniform()};
        const Vec2 b{rng.uniform(), rng.uniform()};
        if (a == b) continue;
        const SpatialRelation rel = relate(a, b);
        int satisfied = 0;
        for (int k = 0; k < kNumSpatialRelations; ++k) {
            if (holds(a, b, static_cast<SpatialRelation>(k))) ++satisfied;
        }
        // A diagonal satisfies itself plus its two components; a cardinal only itself.
        CHECK(satisfied == (is_cardinal(rel) ? 1 : 3));
    }
}

TEST_CASE("antisymmetry: swapping the points rotates the relation by 180 degrees") {
    Rng rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const Vec2 a{rng.uniform(), rng.uniform()};
        const Vec2 b{rng.uniform(), rng.uniform()};
        if (a == b) continue;
        CHECK(relate(b, a) == rotate180(relate(a, b)));
    }
}

TEST_CASE("containment in geometric planes and the background") {
    SceneGraph scene;
    scene.planes.push_back({});  // background
    PlaneAttributes disc_plane;
    disc_plane.shape = PlaneShape::Circular;
    disc_plane.color = PlaneColor::Black;
    disc_plane.material = PlaneMaterial::Wood;
    disc_plane.region = Disc{{0.5, 0.5}, 0.2};
    scene.planes.push_back(disc_plane);

    ObjectAttributes obj;
    obj.position = {0.5, 0.5};
    obj.radius = 0.05;
    CHECK(spatial_contains(scene, 1, obj));
    CHECK(!spatial_contains(scene, 0, obj));

    // Straddling the plane edge: inside neither the plane nor the background.
    obj.position = {0.69, 0.5};
    CHECK(!spatial_contains(scene, 1, obj));
    CHECK(!spatial_contains(scene, 0, obj));

    // Clearly outside the plane: background.
    obj.position = {0.9, 0.9};
    CHECK(spatial_contains(scene, 0, obj));
    CHECK(!spatial_contains(scene, 1, obj));
}
