#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlevr/geometry.hpp"

namespace qlevr {

enum class PlaneShape { Triangular, Rectangular, Circular, NonGeometric };
enum class PlaneMaterial { Marble, Wood };
enum class PlaneColor { Black, Gray, Brown, White };

enum class ObjectShape { Cone, Cube, Cylinder, Pentahedron, Sphere, TriangularPrism, Tetrahedron };
enum class ObjectSize { Small, Large };
enum class ObjectMaterial { Metal, Rubber, Leather, Marble, Wood };
enum class ObjectColor { Blue, Brown, Cyan, Gray, Green, Purple, Red, Yellow };

inline constexpr int kNumObjectShapes = 7;
inline constexpr int kNumObjectMaterials = 5;
inline constexpr int kNumObjectColors = 8;

std::string_view to_string(PlaneShape v);
std::string_view to_string(PlaneMaterial v);
std::string_view to_string(PlaneColor v);
std::string_view to_string(ObjectShape v);
std::string_view to_string(ObjectSize v);
std::string_view to_string(ObjectMaterial v);
std::string_view to_string(ObjectColor v);

std::optional<PlaneShape> plane_shape_from_string(std::string_view s);
std::optional<PlaneMaterial> plane_material_from_string(std::string_view s);
std::optional<PlaneColor> plane_color_from_string(std::string_view s);
std::optional<ObjectShape> object_shape_from_string(std::string_view s);
std::optional<ObjectSize> object_size_from_string(std::string_view s);
std::optional<ObjectMaterial> object_material_from_string(std::string_view s);
std::optional<ObjectColor> object_color_from_string(std::string_view s);

struct PlaneAttributes {
    PlaneShape shape = PlaneShape::NonGeometric;
    PlaneColor color = PlaneColor::White;
    std::optional<PlaneMaterial> material;  // absent for the background plane
    PlaneRegion region;                     // unit-table coordinates

    bool geometric() const { return shape != PlaneShape::NonGeometric; }
};

struct ObjectAttributes {
    ObjectShape shape = ObjectShape::Cube;
    ObjectSize size = ObjectSize::Small;
    ObjectMaterial material = ObjectMaterial::Metal;
    ObjectColor color = ObjectColor::Blue;
    Vec2 position;        // unit-table coordinates
    double radius = 0.0;  // footprint radius, table-side fraction

    Disc footprint() const { return {position, radius}; }
};

struct SceneGraph {
    int64_t scene_id = 0;
    uint64_t rng_seed = 0;
    std::vector<PlaneAttributes> planes;  // index 0 = white non-geometric background
    std::vector<ObjectAttributes> objects;
    std::vector<int> containment;  // object index -> plane index

    int geometric_plane_count() const { return static_cast<int>(planes.size()) - 1; }
};

// All numeric conventions live here. Coordinates are fractions of the table
// side; the two size classes use disjoint radius intervals so that "larger
// than" is never ambiguous between classes.
struct SceneLimits {
    double eps_obj = 0.01;    // minimum gap between object footprints
    double eps_plane = 0.01;  // minimum gap between an object and a foreign plane boundary
    double small_radius_min = 0.015;
    double small_radius_max = 0.030;
    double large_radius_min = 0.040;
    double large_radius_max = 0.060;
    int min_planes = 1;
    int max_planes = 5;
    int min_objects_per_plane = 1;
    int max_objects_per_plane = 10;
    int min_objects_background = 1;
    int max_objects_background = 12;
    double plane_area_min = 0.03;
    double plane_area_max = 0.12;
    double plane_gap = 0.02;     // minimum plane-to-plane boundary distance
    double table_margin = 0.01;  // planes keep this margin to the table edge
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Diagnoses every violated structural invariant; never throws. An empty
// report means the scene is valid.
ValidationReport validate_scene(const SceneGraph& scene, const SceneLimits& limits = {});

}  // namespace qlevr
