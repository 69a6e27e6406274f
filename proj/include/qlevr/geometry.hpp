#pragma once

#include <cmath>
#include <variant>
#include <vector>

namespace qlevr {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

struct Disc {
    Vec2 center;
    double radius = 0.0;
};

// Convex, counterclockwise.
using Polygon = std::vector<Vec2>;

// A plane occupies either a disc or a convex polygon on the unit table.
using PlaneRegion = std::variant<Disc, Polygon>;

double polygon_area(const Polygon& poly);  // signed; positive when CCW
Vec2 polygon_centroid(const Polygon& poly);
bool point_in_convex_polygon(Vec2 p, const Polygon& poly);  // boundary counts as inside
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);
double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
double polygon_boundary_distance(Vec2 p, const Polygon& poly);

double region_area(const PlaneRegion& region);
Vec2 region_centroid(const PlaneRegion& region);
bool region_contains_point(const PlaneRegion& region, Vec2 p);
double region_boundary_distance(const PlaneRegion& region, Vec2 p);

// Whole-footprint tests: a disc counts as inside a region only when every
// point of the disc is, and as outside only when it is disjoint from it.
bool disc_inside_region(const PlaneRegion& region, const Disc& disc);
bool disc_outside_region(const PlaneRegion& region, const Disc& disc, double clearance = 0.0);

bool regions_overlap(const PlaneRegion& a, const PlaneRegion& b);
// Minimum boundary-to-boundary distance between two disjoint regions; 0 when
// they overlap or one contains the other.
double region_gap(const PlaneRegion& a, const PlaneRegion& b);

// Distance from p to the boundary of the unit square; negative when outside.
inline double unit_square_margin(Vec2 p) {
    return std::min(std::min(p.x, p.y), std::min(1.0 - p.x, 1.0 - p.y));
}

inline bool in_unit_square(Vec2 p) { return unit_square_margin(p) >= 0.0; }

}  // namespace qlevr
