#include "qlevr/scene.hpp"

#include <array>
#include <cmath>

#include "qlevr/spatial.hpp"

namespace qlevr {

namespace {

template <class E, size_t N>
std::optional<E> lookup(const std::array<std::string_view, N>& names, std::string_view s) {
    for (size_t i = 0; i < N; ++i) {
        if (names[i] == s) return static_cast<E>(i);
    }
    return std::nullopt;
}

constexpr std::array<std::string_view, 4> kPlaneShapeNames{"triangular", "rectangular", "circular",
                                                           "non_geometric"};
constexpr std::array<std::string_view, 2> kPlaneMaterialNames{"marble", "wood"};
constexpr std::array<std::string_view, 4> kPlaneColorNames{"black", "gray", "brown", "white"};
constexpr std::array<std::string_view, 7> kObjectShapeNames{
    "cone", "cube", "cylinder", "pentahedron", "sphere", "triangular_prism", "tetrahedron"};
constexpr std::array<std::string_view, 2> kObjectSizeNames{"small", "large"};
constexpr std::array<std::string_view, 5> kObjectMaterialNames{"metal", "rubber", "leather", "marble",
                                                               "wood"};
constexpr std::array<std::string_view, 8> kObjectColorNames{"blue",  "brown",  "cyan", "gray",
                                                            "green", "purple", "red",  "yellow"};

std::string entity(const char* what, size_t idx) { return std::string(what) + " " + std::to_string(idx); }

}  // namespace

std::string_view to_string(PlaneShape v) { return kPlaneShapeNames[static_cast<size_t>(v)]; }
std::string_view to_string(PlaneMaterial v) { return kPlaneMaterialNames[static_cast<size_t>(v)]; }
std::string_view to_string(PlaneColor v) { return kPlaneColorNames[static_cast<size_t>(v)]; }
std::string_view to_string(ObjectShape v) { return kObjectShapeNames[static_cast<size_t>(v)]; }
std::string_view to_string(ObjectSize v) { return kObjectSizeNames[static_cast<size_t>(v)]; }
std::string_view to_string(ObjectMaterial v) { return kObjectMaterialNames[static_cast<size_t>(v)]; }
std::string_view to_string(ObjectColor v) { return kObjectColorNames[static_cast<size_t>(v)]; }

std::optional<PlaneShape> plane_shape_from_string(std::string_view s) {
    return lookup<PlaneShape>(kPlaneShapeNames, s);
}
std::optional<PlaneMaterial> plane_material_from_string(std::string_view s) {
    return lookup<PlaneMaterial>(kPlaneMaterialNames, s);
}
std::optional<PlaneColor> plane_color_from_string(std::string_view s) {
    return lookup<PlaneColor>(kPlaneColorNames, s);
}
std::optional<ObjectShape> object_shape_from_string(std::string_view s) {
    return lookup<ObjectShape>(kObjectShapeNames, s);
}
std::optional<ObjectSize> object_size_from_string(std::string_view s) {
    return lookup<ObjectSize>(kObjectSizeNames, s);
}
std::optional<ObjectMaterial> object_material_from_string(std::string_view s) {
    return lookup<ObjectMaterial>(kObjectMaterialNames, s);
}
std::optional<ObjectColor> object_color_from_string(std::string_view s) {
    return lookup<ObjectColor>(kObjectColorNames, s);
}

ValidationReport validate_scene(const SceneGraph& scene, const SceneLimits& limits) {
    // Numeric slack: the sampler places entities with a strictly larger
    // margin, so a valid scene never sits exactly on these thresholds.
    constexpr double kTol = 1e-9;

    ValidationReport report;
    auto add = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };

    if (scene.planes.empty()) {
        add("scene has no planes at all (background missing)");
        return report;
    }

    const PlaneAttributes& background = scene.planes[0];
    if (background.geometric()) add("plane 0 must be the non-geometric background");
    if (background.color != PlaneColor::White) add("background plane color must be white");
    if (background.material.has_value()) add("background plane must have no material");

    const int geo = scene.geometric_plane_count();
    if (geo < limits.min_planes)
        add("plane count " + std::to_string(geo) + " < " + std::to_string(limits.min_planes));
    if (geo > limits.max_planes)
        add("plane count " + std::to_string(geo) + " > " + std::to_string(limits.max_planes));

    for (size_t i = 1; i < scene.planes.size(); ++i) {
        const PlaneAttributes& plane = scene.planes[i];
        if (!plane.geometric()) {
            add(entity("plane", i) + " duplicates the non-geometric background");
            continue;
        }
        if (plane.color == PlaneColor::White) add(entity("plane", i) + " has reserved color white");
        if (!plane.material.has_value()) add(entity("plane", i) + " lacks a material");
        const double area = region_area(plane.region);
        if (area < limits.plane_area_min - kTol || area > limits.plane_area_max + kTol)
            add(entity("plane", i) + " area " + std::to_string(area) + " outside configured range");
        // Region inside the unit table.
        if (const auto* disc = std::get_if<Disc>(&plane.region)) {
            if (unit_square_margin(disc->center) < disc->radius - kTol)
                add(entity("plane", i) + " extends beyond the unit table");
        } else {
            for (const Vec2 v : std::get<Polygon>(plane.region)) {
                if (!in_unit_square(v)) {
                    add(entity("plane", i) + " has a vertex outside the unit table");
                    break;
                }
            }
        }
    }

    // Pairwise disjoint geometric plane interiors.
    for (size_t i = 1; i < scene.planes.size(); ++i) {
        for (size_t j = i + 1; j < scene.planes.size(); ++j) {
            if (regions_overlap(scene.planes[i].region, scene.planes[j].region))
                add(entity("plane", i) + " overlaps " + entity("plane", j));
        }
    }

    if (scene.containment.size() != scene.objects.size())
        add("containment map size differs from object count");

    std::vector<int> per_plane(scene.planes.size(), 0);
    for (size_t i = 0; i < scene.objects.size(); ++i) {
        const ObjectAttributes& obj = scene.objects[i];
        const int plane_idx = i < scene.containment.size() ? scene.containment[i] : -1;
        if (plane_idx < 0 || plane_idx >= static_cast<int>(scene.planes.size())) {
            add(entity("object", i) + " has invalid containment entry");
            continue;
        }
        per_plane[static_cast<size_t>(plane_idx)]++;

        if (!in_unit_square(obj.position)) add(entity("object", i) + " position outside the unit table");

        const double lo = obj.size == ObjectSize::Small ? limits.small_radius_min : limits.large_radius_min;
        const double hi = obj.size == ObjectSize::Small ? limits.small_radius_max : limits.large_radius_max;
        if (obj.radius < lo - kTol || obj.radius > hi + kTol)
            add(entity("object", i) + " radius inconsistent with its size class");

        if (!spatial_contains(scene, plane_idx, obj))
            add(entity("object", i) + " footprint not inside its containing " + entity("plane", plane_idx));
        // Containment must be unambiguous: the recorded plane is the only one
        // whose region holds the object's center.
        for (size_t p = 1; p < scene.planes.size(); ++p) {
            const bool inside = region_contains_point(scene.planes[p].region, obj.position);
            if (inside && static_cast<int>(p) != plane_idx)
                add(entity("object", i) + " center lies inside foreign " + entity("plane", p));
            if (!inside && static_cast<int>(p) == plane_idx)
                add(entity("object", i) + " center outside recorded " + entity("plane", p));
        }

        // Clearance to foreign plane boundaries.
        for (size_t p = 1; p < scene.planes.size(); ++p) {
            if (static_cast<int>(p) == plane_idx) continue;
            const double d = region_boundary_distance(scene.planes[p].region, obj.position);
            if (d < obj.radius + limits.eps_plane - kTol)
                add(entity("object", i) + " too close to boundary of " + entity("plane", p));
        }
        if (plane_idx == 0) {
            if (unit_square_margin(obj.position) < obj.radius - kTol)
                add(entity("object", i) + " footprint extends beyond the table");
        }
    }

    for (size_t i = 0; i < scene.objects.size(); ++i) {
        for (size_t j = i + 1; j < scene.objects.size(); ++j) {
            const ObjectAttributes& a = scene.objects[i];
            const ObjectAttributes& b = scene.objects[j];
            const double gap = distance(a.position, b.position) - a.radius - b.radius;
            if (gap < limits.eps_obj - kTol)
                add("objects " + std::to_string(i) + " and " + std::to_string(j) + " violate clearance");
        }
    }

    for (size_t p = 0; p < scene.planes.size(); ++p) {
        const int count = per_plane[p];
        const int lo = p == 0 ? limits.min_objects_background : limits.min_objects_per_plane;
        const int hi = p == 0 ? limits.max_objects_background : limits.max_objects_per_plane;
        if (count < lo)
            add(entity("plane", p) + " holds " + std::to_string(count) + " objects < " + std::to_string(lo));
        if (count > hi)
            add(entity("plane", p) + " holds " + std::to_string(count) + " objects > " + std::to_string(hi));
    }

    return report;
}

}  // namespace qlevr
