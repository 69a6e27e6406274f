#include "qlevr/geometry.hpp"

#include <algorithm>
#include <limits>

namespace qlevr {

double polygon_area(const Polygon& poly) {
    double twice = 0.0;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        twice += cross(poly[i], poly[(i + 1) % n]);
    }
    return 0.5 * twice;
}

Vec2 polygon_centroid(const Polygon& poly) {
    const size_t n = poly.size();
    double twice = 0.0;
    Vec2 acc{0.0, 0.0};
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        const double c = cross(a, b);
        twice += c;
        acc = acc + (a + b) * c;
    }
    if (twice == 0.0) return poly.empty() ? Vec2{} : poly[0];
    return acc * (1.0 / (3.0 * twice));
}

bool point_in_convex_polygon(Vec2 p, const Polygon& poly) {
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        if (cross(b - a, p - a) < 0.0) return false;  // CCW: inside is left of every edge
    }
    return true;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + ab * t);
}

double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return 0.0;  // proper crossing
    return std::min(std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)),
                    std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)));
}

double polygon_boundary_distance(Vec2 p, const Polygon& poly) {
    double best = std::numeric_limits<double>::infinity();
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        best = std::min(best, point_segment_distance(p, poly[i], poly[(i + 1) % n]));
    }
    return best;
}

double region_area(const PlaneRegion& region) {
    if (const auto* disc = std::get_if<Disc>(&region)) {
        return M_PI * disc->radius * disc->radius;
    }
    return polygon_area(std::get<Polygon>(region));
}

Vec2 region_centroid(const PlaneRegion& region) {
    if (const auto* disc = std::get_if<Disc>(&region)) return disc->center;
    return polygon_centroid(std::get<Polygon>(region));
}

bool region_contains_point(const PlaneRegion& region, Vec2 p) {
    if (const auto* disc = std::get_if<Disc>(&region)) {
        return distance(disc->center, p) <= disc->radius;
    }
    return point_in_convex_polygon(p, std::get<Polygon>(region));
}

double region_boundary_distance(const PlaneRegion& region, Vec2 p) {
    if (const auto* disc = std::get_if<Disc>(&region)) {
        return std::abs(distance(disc->center, p) - disc->radius);
    }
    return polygon_boundary_distance(p, std::get<Polygon>(region));
}

bool disc_inside_region(const PlaneRegion& region, const Disc& disc) {
    if (!region_contains_point(region, disc.center)) return false;
    return region_boundary_distance(region, disc.center) >= disc.radius;
}

bool disc_outside_region(const PlaneRegion& region, const Disc& disc, double clearance) {
    if (region_contains_point(region, disc.center)) return false;
    return region_boundary_distance(region, disc.center) >= disc.radius + clearance;
}

namespace {

// Separating-axis test for two convex CCW polygons.
bool convex_polygons_overlap(const Polygon& a, const Polygon& b) {
    for (const Polygon* poly : {&a, &b}) {
        const size_t n = poly->size();
        for (size_t i = 0; i < n; ++i) {
            const Vec2 p0 = (*poly)[i];
            const Vec2 p1 = (*poly)[(i + 1) % n];
            const Vec2 axis{p1.y - p0.y, p0.x - p1.x};  // outward-ish normal; sign irrelevant
            double min_a = std::numeric_limits<double>::infinity(), max_a = -min_a;
            for (const Vec2 v : a) {
                const double s = dot(axis, v);
                min_a = std::min(min_a, s);
                max_a = std::max(max_a, s);
            }
            double min_b = std::numeric_limits<double>::infinity(), max_b = -min_b;
            for (const Vec2 v : b) {
                const double s = dot(axis, v);
                min_b = std::min(min_b, s);
                max_b = std::max(max_b, s);
            }
            if (max_a < min_b || max_b < min_a) return false;
        }
    }
    return true;
}

double polygon_polygon_gap(const Polygon& a, const Polygon& b) {
    double best = std::numeric_limits<double>::infinity();
    const size_t na = a.size(), nb = b.size();
    for (size_t i = 0; i < na; ++i) {
        for (size_t j = 0; j < nb; ++j) {
            best = std::min(best, segment_segment_distance(a[i], a[(i + 1) % na], b[j], b[(j + 1) % nb]));
        }
    }
    return best;
}

}  // namespace

bool regions_overlap(const PlaneRegion& a, const PlaneRegion& b) {
    const auto* da = std::get_if<Disc>(&a);
    const auto* db = std::get_if<Disc>(&b);
    if (da && db) {
        return distance(da->center, db->center) < da->radius + db->radius;
    }
    if (da || db) {
        const Disc& disc = da ? *da : *db;
        const Polygon& poly = std::get<Polygon>(da ? b : a);
        if (point_in_convex_polygon(disc.center, poly)) return true;
        return polygon_boundary_distance(disc.center, poly) < disc.radius;
    }
    const Polygon& pa = std::get<Polygon>(a);
    const Polygon& pb = std::get<Polygon>(b);
    return convex_polygons_overlap(pa, pb);
}

double region_gap(const PlaneRegion& a, const PlaneRegion& b) {
    if (regions_overlap(a, b)) return 0.0;
    const auto* da = std::get_if<Disc>(&a);
    const auto* db = std::get_if<Disc>(&b);
    if (da && db) {
        return std::max(0.0, distance(da->center, db->center) - da->radius - db->radius);
    }
    if (da || db) {
        const Disc& disc = da ? *da : *db;
        const Polygon& poly = std::get<Polygon>(da ? b : a);
        return std::max(0.0, polygon_boundary_distance(disc.center, poly) - disc.radius);
    }
    return polygon_polygon_gap(std::get<Polygon>(a), std::get<Polygon>(b));
}

}  // namespace qlevr
