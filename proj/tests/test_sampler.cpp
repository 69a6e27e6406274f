#include <set>

#include "doctest.h"
#include "qlevr/sampler.hpp"

using namespace qlevr;

TEST_CASE("sampling is a pure function of (config, scene_id)") {
    SamplerConfig config;
    config.seed = 1;
    const SceneGraph a = sample_scene(config, 0);
    const SceneGraph b = sample_scene(config, 0);
    REQUIRE(a.planes.size() == b.planes.size());
    REQUIRE(a.objects.size() == b.objects.size());
    for (size_t i = 0; i < a.objects.size(); ++i) {
        CHECK(a.objects[i].position == b.objects[i].position);
        CHECK(a.objects[i].radius == b.objects[i].radius);
        CHECK(a.objects[i].shape == b.objects[i].shape);
    }
    const SceneGraph c = sample_scene(config, 1);
    CHECK((c.objects.size() != a.objects.size() ||
           !(c.objects[0].position == a.objects[0].position)));
}

TEST_CASE("forced bounds: one plane, one object") {
    SamplerConfig config;
    config.seed = 42;
    config.limits.max_planes = 1;
    config.limits.max_objects_per_plane = 1;
    const SceneGraph scene = sample_scene(config, 3);
    CHECK(scene.geometric_plane_count() == 1);
    int on_plane = 0, on_background = 0;
    for (int c : scene.containment) (c == 0 ? on_background : on_plane)++;
    CHECK(on_plane == 1);
    CHECK(on_background >= 1);
    CHECK(on_background <= 12);
    CHECK(validate_scene(scene, config.limits).ok());
}

TEST_CASE("sampled scenes validate and cover the configuration space") {
    SamplerConfig config;
    config.seed = 7;
    std::set<int> plane_counts;
    std::set<ObjectShape> shapes;
    std::set<ObjectColor> colors;
    std::set<ObjectMaterial> materials;
    std::set<ObjectSize> sizes;
    for (int id = 0; id < 300; ++id) {
        const SceneGraph scene = sample_scene(config, id);
        const ValidationReport report = validate_scene(scene, config.limits);
        if (!report.ok()) {
            CAPTURE(id);
            CAPTURE(report.violations[0]);
            REQUIRE(report.ok());
        }
        plane_counts.insert(scene.geometric_plane_count());
        for (const auto& obj : scene.objects) {
            shapes.insert(obj.shape);
            colors.insert(obj.color);
            materials.insert(obj.material);
            sizes.insert(obj.size);
        }
    }
    CHECK(plane_counts == std::set<int>{1, 2, 3, 4, 5});
    CHECK(shapes.size() == 7);
    CHECK(colors.size() == 8);
    CHECK(materials.size() == 5);
    CHECK(sizes.size() == 2);
}

TEST_CASE("plane geometry respects area bounds and the table") {
    Rng rng(99);
    SceneLimits limits;
    for (int i = 0; i < 200; ++i) {
        for (PlaneShape shape : {PlaneShape::Triangular, PlaneShape::Rectangular, PlaneShape::Circular}) {
            const PlaneRegion region = sample_plane_geometry(shape, rng, limits);
            const double area = region_area(region);
            CHECK(area >= limits.plane_area_min - 1e-9);
            CHECK(area <= limits.plane_area_max + 1e-9);
            if (const auto* poly = std::get_if<Polygon>(&region)) {
                CHECK(polygon_area(*poly) > 0.0);  // positively oriented
                for (const Vec2 v : *poly) CHECK(in_unit_square(v));
                CHECK(poly->size() == (shape == PlaneShape::Triangular ? 3 : 4));
            } else {
                const auto& disc = std::get<Disc>(region);
                CHECK(unit_square_margin(disc.center) >= disc.radius);
            }
        }
    }
}
