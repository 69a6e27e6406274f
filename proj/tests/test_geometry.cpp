#include <cmath>

#include "doctest.h"
#include "qlevr/geometry.hpp"

using namespace qlevr;

TEST_CASE("polygon area, centroid and containment") {
    const Polygon square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(polygon_area(square) == doctest::Approx(1.0));
    const Vec2 c = polygon_centroid(square);
    CHECK(c.x == doctest::Approx(0.5));
    CHECK(c.y == doctest::Approx(0.5));

    CHECK(point_in_convex_polygon({0.5, 0.5}, square));
    CHECK(point_in_convex_polygon({0.0, 0.5}, square));  // boundary counts
    CHECK(!point_in_convex_polygon({1.2, 0.5}, square));
}

TEST_CASE("distances") {
    CHECK(point_segment_distance({0, 1}, {-1, 0}, {1, 0}) == doctest::Approx(1.0));
    CHECK(point_segment_distance({3, 0}, {-1, 0}, {1, 0}) == doctest::Approx(2.0));
    CHECK(segment_segment_distance({0, 0}, {1, 0}, {0.5, -1}, {0.5, 1}) == doctest::Approx(0.0));
    CHECK(segment_segment_distance({0, 0}, {1, 0}, {0, 2}, {1, 2}) == doctest::Approx(2.0));
}

TEST_CASE("disc containment in regions") {
    const PlaneRegion square = Polygon{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(disc_inside_region(square, {{0.5, 0.5}, 0.2}));
    CHECK(!disc_inside_region(square, {{0.05, 0.5}, 0.2}));  // pokes out the left edge
    CHECK(disc_outside_region(square, {{2.0, 0.5}, 0.2}));

    const PlaneRegion disc = Disc{{0.5, 0.5}, 0.3};
    CHECK(disc_inside_region(disc, {{0.5, 0.5}, 0.29}));
    CHECK(!disc_inside_region(disc, {{0.7, 0.5}, 0.15}));
    CHECK(disc_outside_region(disc, {{0.95, 0.5}, 0.1}));
    CHECK(!disc_outside_region(disc, {{0.85, 0.5}, 0.1}));
}

TEST_CASE("region overlap and gaps") {
    const PlaneRegion a = Polygon{{0, 0}, {0.4, 0}, {0.4, 0.4}, {0, 0.4}};
    const PlaneRegion b = Polygon{{0.5, 0}, {0.9, 0}, {0.9, 0.4}, {0.5, 0.4}};
    const PlaneRegion c = Polygon{{0.3, 0.1}, {0.7, 0.1}, {0.7, 0.5}, {0.3, 0.5}};
    CHECK(!regions_overlap(a, b));
    CHECK(regions_overlap(a, c));
    CHECK(region_gap(a, b) == doctest::Approx(0.1));
    CHECK(region_gap(a, c) == doctest::Approx(0.0));

    const PlaneRegion d1 = Disc{{0.2, 0.2}, 0.1};
    const PlaneRegion d2 = Disc{{0.6, 0.2}, 0.1};
    CHECK(!regions_overlap(d1, d2));
    CHECK(region_gap(d1, d2) == doctest::Approx(0.2));
    CHECK(region_gap(d1, a) == doctest::Approx(0.0));  // disc inside the square overlaps
}
