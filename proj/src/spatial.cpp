#include "qlevr/spatial.hpp"

#include <array>
#include <cmath>

namespace qlevr {

namespace {
constexpr std::array<std::string_view, 8> kRelationNames{
    "right", "right_front", "front", "left_front", "left", "left_rear", "back", "right_rear"};
}

std::string_view to_string(SpatialRelation r) { return kRelationNames[static_cast<size_t>(r)]; }

std::optional<SpatialRelation> spatial_relation_from_string(std::string_view s) {
    for (size_t i = 0; i < kRelationNames.size(); ++i) {
        if (kRelationNames[i] == s) return static_cast<SpatialRelation>(i);
    }
    return std::nullopt;
}

SpatialRelation relate(Vec2 a, Vec2 b) {
    const Vec2 v = b - a;
    if (v.x == 0.0 && v.y == 0.0) throw CoincidentPoints{};
    const double theta = std::atan2(v.y, v.x);  // (-pi, pi]
    // Shift by half a sector so that sector k covers [k*45 - 22.5, k*45 + 22.5)
    // degrees; floor's half-open interval realizes the counterclockwise tie rule.
    const double sectors = (theta + M_PI / 8.0) / (M_PI / 4.0);
    const int k = static_cast<int>(std::floor(sectors));
    return static_cast<SpatialRelation>(((k % 8) + 8) % 8);
}

bool is_cardinal(SpatialRelation r) {
    return static_cast<int>(r) % 2 == 0;  // right, front, left, back
}

std::pair<SpatialRelation, SpatialRelation> diagonal_components(SpatialRelation r) {
    const int k = static_cast<int>(r);
    if (k % 2 == 0) throw std::invalid_argument("diagonal_components: not a diagonal relation");
    return {static_cast<SpatialRelation>((k + 7) % 8), static_cast<SpatialRelation>((k + 1) % 8)};
}

bool holds(Vec2 a, Vec2 b, SpatialRelation r) {
    const SpatialRelation actual = relate(a, b);
    if (actual == r) return true;
    if (is_cardinal(r) && !is_cardinal(actual)) {
        const auto [c1, c2] = diagonal_components(actual);
        return c1 == r || c2 == r;
    }
    return false;
}

SpatialRelation rotate180(SpatialRelation r) {
    return static_cast<SpatialRelation>((static_cast<int>(r) + 4) % 8);
}

bool spatial_contains(const SceneGraph& scene, int plane_index, const ObjectAttributes& obj) {
    const Disc fp = obj.footprint();
    if (plane_index == 0) {
        if (unit_square_margin(obj.position) < fp.radius) return false;
        for (size_t p = 1; p < scene.planes.size(); ++p) {
            if (!disc_outside_region(scene.planes[p].region, fp)) return false;
        }
        return true;
    }
    return disc_inside_region(scene.planes[static_cast<size_t>(plane_index)].region, fp);
}

}  // namespace qlevr
