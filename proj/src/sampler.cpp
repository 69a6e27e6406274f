#include "qlevr/sampler.hpp"

#include <cmath>

#include "qlevr/spatial.hpp"

namespace qlevr {

namespace {

// Placement predicates use a hair more margin than the validator so that a
// sampled scene never sits exactly on a validation threshold.
constexpr double kSlack = 1e-9;

PlaneShape random_plane_shape(Rng& rng) {
    return static_cast<PlaneShape>(rng.uniform_int(0, 2));  // triangular, rectangular, circular
}

Polygon make_ccw(Polygon poly) {
    if (polygon_area(poly) < 0.0) std::reverse(poly.begin(), poly.end());
    return poly;
}

bool polygon_in_table(const Polygon& poly, double margin) {
    for (const Vec2 v : poly) {
        if (unit_square_margin(v) < margin) return false;
    }
    return true;
}

// Conservative estimate of how many objects fit on a plane of this area:
// darts at random positions saturate well below perfect packing.
int object_capacity(double area, const SceneLimits& limits) {
    const double small_cost =
        M_PI * (limits.small_radius_max + limits.eps_obj) * (limits.small_radius_max + limits.eps_obj);
    const int cap = static_cast<int>(std::floor(area * 0.45 / small_cost));
    return std::clamp(cap, 1, limits.max_objects_per_plane);
}

ObjectAttributes sample_object_attributes(Rng& rng, const SceneLimits& limits, bool allow_large) {
    ObjectAttributes obj;
    obj.shape = static_cast<ObjectShape>(rng.uniform_int(0, kNumObjectShapes - 1));
    obj.material = static_cast<ObjectMaterial>(rng.uniform_int(0, kNumObjectMaterials - 1));
    obj.color = static_cast<ObjectColor>(rng.uniform_int(0, kNumObjectColors - 1));
    obj.size = allow_large && rng.coin() ? ObjectSize::Large : ObjectSize::Small;
    obj.radius = obj.size == ObjectSize::Small
                     ? rng.uniform(limits.small_radius_min, limits.small_radius_max)
                     : rng.uniform(limits.large_radius_min, limits.large_radius_max);
    return obj;
}

struct Layout {
    SceneGraph scene;
    bool ok = false;
};

bool place_objects_on_plane(SceneGraph& scene, int plane_index, int count, Rng& rng,
                            const SamplerConfig& config) {
    const SceneLimits& limits = config.limits;
    const bool background = plane_index == 0;

    // Per-plane area budget keeps large objects off planes that cannot hold
    // the remaining smalls afterwards.
    const double small_cost =
        M_PI * (limits.small_radius_max + limits.eps_obj) * (limits.small_radius_max + limits.eps_obj);
    const double large_cost =
        M_PI * (limits.large_radius_max + limits.eps_obj) * (limits.large_radius_max + limits.eps_obj);
    double budget = background ? 1e9 : region_area(scene.planes[static_cast<size_t>(plane_index)].region) * 0.45;

    for (int k = 0; k < count; ++k) {
        const int remaining_after = count - k - 1;
        const bool allow_large = budget - remaining_after * small_cost >= large_cost;
        ObjectAttributes obj = sample_object_attributes(rng, limits, allow_large);
        budget -= obj.size == ObjectSize::Large ? large_cost : small_cost;

        bool placed = false;
        for (int attempt = 0; attempt < config.max_place_attempts; ++attempt) {
            obj.position = {rng.uniform(), rng.uniform()};
            if (!spatial_contains(scene, plane_index, obj)) continue;

            bool clear = true;
            // Foreign plane boundary clearance.
            for (size_t p = 1; p < scene.planes.size() && clear; ++p) {
                if (static_cast<int>(p) == plane_index) continue;
                if (region_boundary_distance(scene.planes[p].region, obj.position) <
                    obj.radius + limits.eps_plane + kSlack) {
                    clear = false;
                }
            }
            if (background && unit_square_margin(obj.position) < obj.radius + kSlack) clear = false;
            // Object-object clearance, scene wide.
            for (const ObjectAttributes& other : scene.objects) {
                if (!clear) break;
                if (distance(other.position, obj.position) <
                    other.radius + obj.radius + limits.eps_obj + kSlack) {
                    clear = false;
                }
            }
            if (!clear) continue;

            scene.objects.push_back(obj);
            scene.containment.push_back(plane_index);
            placed = true;
            break;
        }
        if (!placed) return false;
    }
    return true;
}

Layout try_layout(const SamplerConfig& config, int64_t scene_id, Rng& rng) {
    const SceneLimits& limits = config.limits;
    Layout layout;
    SceneGraph& scene = layout.scene;
    scene.scene_id = scene_id;

    PlaneAttributes background;
    background.shape = PlaneShape::NonGeometric;
    background.color = PlaneColor::White;
    background.region = Polygon{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    scene.planes.push_back(background);

    const int plane_count = rng.uniform_int(limits.min_planes, limits.max_planes);
    for (int p = 0; p < plane_count; ++p) {
        PlaneAttributes plane;
        plane.shape = random_plane_shape(rng);
        plane.material = static_cast<PlaneMaterial>(rng.uniform_int(0, 1));
        plane.color = static_cast<PlaneColor>(rng.uniform_int(0, 2));  // black, gray, brown

        bool placed = false;
        for (int attempt = 0; attempt < config.max_place_attempts; ++attempt) {
            // Shrink the admissible area when many planes must fit.
            SceneLimits local = limits;
            local.plane_area_max =
                std::max(limits.plane_area_min,
                         limits.plane_area_max - 0.015 * static_cast<double>(plane_count - 1));
            plane.region = sample_plane_geometry(plane.shape, rng, local);

            bool clear = true;
            for (size_t q = 1; q < scene.planes.size(); ++q) {
                if (region_gap(plane.region, scene.planes[q].region) < limits.plane_gap + kSlack) {
                    clear = false;
                    break;
                }
            }
            if (!clear) continue;
            scene.planes.push_back(plane);
            placed = true;
            break;
        }
        if (!placed) return layout;
    }

    for (size_t p = 1; p < scene.planes.size(); ++p) {
        const double area = region_area(scene.planes[p].region);
        const int count = rng.uniform_int(limits.min_objects_per_plane, object_capacity(area, limits));
        if (!place_objects_on_plane(scene, static_cast<int>(p), count, rng, config)) return layout;
    }
    const int bg_count = rng.uniform_int(limits.min_objects_background, limits.max_objects_background);
    if (!place_objects_on_plane(scene, 0, bg_count, rng, config)) return layout;

    layout.ok = true;
    return layout;
}

}  // namespace

PlaneRegion sample_plane_geometry(PlaneShape shape, Rng& rng, const SceneLimits& limits) {
    const double area = rng.uniform(limits.plane_area_min, limits.plane_area_max);
    const double margin = limits.table_margin;

    switch (shape) {
        case PlaneShape::Circular: {
            const double r = std::sqrt(area / M_PI);
            const double lo = r + margin;
            const double hi = 1.0 - r - margin;
            return Disc{{rng.uniform(lo, hi), rng.uniform(lo, hi)}, r};
        }
        case PlaneShape::Rectangular: {
            for (int attempt = 0; attempt < 64; ++attempt) {
                const double aspect = rng.uniform(0.5, 2.0);
                const double w = std::sqrt(area * aspect);
                const double h = area / w;
                const double theta = rng.uniform(0.0, M_PI / 2.0);
                const Vec2 ex{std::cos(theta) * w / 2.0, std::sin(theta) * w / 2.0};
                const Vec2 ey{-std::sin(theta) * h / 2.0, std::cos(theta) * h / 2.0};
                const Vec2 c{rng.uniform(0.2, 0.8), rng.uniform(0.2, 0.8)};
                Polygon poly{c - ex - ey, c + ex - ey, c + ex + ey, c - ex + ey};
                poly = make_ccw(std::move(poly));
                if (polygon_in_table(poly, margin)) return poly;
            }
            // Fall back to an axis-aligned square that always fits.
            const double s = std::sqrt(area);
            const double lo = s / 2.0 + margin;
            const Vec2 c{rng.uniform(lo, 1.0 - lo), rng.uniform(lo, 1.0 - lo)};
            return Polygon{{c.x - s / 2, c.y - s / 2},
                           {c.x + s / 2, c.y - s / 2},
                           {c.x + s / 2, c.y + s / 2},
                           {c.x - s / 2, c.y + s / 2}};
        }
        default: {  // Triangular
            for (int attempt = 0; attempt < 64; ++attempt) {
                const double base_angle = rng.uniform(0.0, 2.0 * M_PI);
                Polygon poly;
                for (int k = 0; k < 3; ++k) {
                    const double jitter = rng.uniform(-0.35, 0.35);
                    const double angle = base_angle + (2.0 * M_PI / 3.0) * k + jitter;
                    const double radial = rng.uniform(0.8, 1.2);
                    poly.push_back({radial * std::cos(angle), radial * std::sin(angle)});
                }
                poly = make_ccw(std::move(poly));
                const double raw = polygon_area(poly);
                if (raw < 1e-6) continue;
                const double scale = std::sqrt(area / raw);
                const Vec2 c{rng.uniform(0.2, 0.8), rng.uniform(0.2, 0.8)};
                for (Vec2& v : poly) v = c + v * scale;
                if (polygon_in_table(poly, margin)) return poly;
            }
            // Equilateral fallback, centered enough to fit.
            const double side = std::sqrt(4.0 * area / std::sqrt(3.0));
            const double rad = side / std::sqrt(3.0);
            const Vec2 c{rng.uniform(0.3, 0.7), rng.uniform(0.3, 0.7)};
            Polygon poly;
            for (int k = 0; k < 3; ++k) {
                const double angle = M_PI / 2.0 + 2.0 * M_PI * k / 3.0;
                poly.push_back(c + Vec2{rad * std::cos(angle), rad * std::sin(angle)});
            }
            return make_ccw(std::move(poly));
        }
    }
}

SceneGraph sample_scene(const SamplerConfig& config, int64_t scene_id) {
    const uint64_t scene_stream = stream_seed(config.seed, static_cast<uint64_t>(scene_id));
    for (int restart = 0; restart < config.max_layout_restarts; ++restart) {
        Rng rng(stream_seed(scene_stream, static_cast<uint64_t>(restart), 0xA11CE));
        Layout layout = try_layout(config, scene_id, rng);
        if (layout.ok) {
            layout.scene.rng_seed = scene_stream;
            return layout.scene;
        }
    }
    throw PlacementExhausted("scene " + std::to_string(scene_id) + ": placement attempts exhausted");
}

}  // namespace qlevr
