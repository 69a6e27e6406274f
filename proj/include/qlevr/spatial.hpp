#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "qlevr/scene.hpp"

namespace qlevr {

// Directions of b relative to a under the viewer convention +x = right,
// +y = front (toward the viewer). Enumerator order is the counterclockwise
// sector index starting at "right".
enum class SpatialRelation {
    Right,
    RightFront,
    Front,
    LeftFront,
    Left,
    LeftRear,
    Back,
    RightRear,
};

inline constexpr int kNumSpatialRelations = 8;

std::string_view to_string(SpatialRelation r);
std::optional<SpatialRelation> spatial_relation_from_string(std::string_view s);

struct CoincidentPoints : std::domain_error {
    CoincidentPoints() : std::domain_error("relate: points coincide") {}
};

// The 8-way sector of the direction b - a. Sectors span 45 degrees centered
// on the compass directions; a direction exactly on a boundary (odd multiple
// of 22.5 degrees) belongs to the counterclockwise sector.
SpatialRelation relate(Vec2 a, Vec2 b);

// True when relate(a, b) equals r, or when r is a cardinal direction that is
// a component of the diagonal relate(a, b) (right-front satisfies "right").
bool holds(Vec2 a, Vec2 b, SpatialRelation r);

SpatialRelation rotate180(SpatialRelation r);
bool is_cardinal(SpatialRelation r);
// Cardinal components of a diagonal; e.g. right-front -> {right, front}.
std::pair<SpatialRelation, SpatialRelation> diagonal_components(SpatialRelation r);

// Whole-footprint containment. Plane 0 is the background: its region is the
// unit table minus every geometric plane.
bool spatial_contains(const SceneGraph& scene, int plane_index, const ObjectAttributes& obj);

}  // namespace qlevr
