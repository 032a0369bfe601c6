#pragma once

#include <cmath>
#include <vector>

namespace dynacon {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Normalizes an angle into (-pi, pi].
double normalize_angle(double theta);

struct Pose {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0; // radians, kept in (-pi, pi]

    Pose() = default;
    Pose(double x_, double y_, double theta_) : x(x_), y(y_), theta(normalize_angle(theta_)) {}
    Point position() const { return {x, y}; }
};

struct Segment {
    Point a;
    Point b;
};

// Distance from point p to segment s.
double point_segment_distance(const Point& p, const Segment& s);

// Simple polygon containment (even-odd rule); points on the boundary count as inside.
bool point_in_polygon(const Point& p, const std::vector<Point>& polygon);

// True if the polygon has >= 3 vertices and no two non-adjacent edges intersect.
bool polygon_is_simple(const std::vector<Point>& polygon);

// True if the interiors of two simple polygons intersect (shared edges allowed).
bool polygons_overlap(const std::vector<Point>& a, const std::vector<Point>& b);

} // namespace dynacon
