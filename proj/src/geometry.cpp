#include "dynacon/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace dynacon {

double normalize_angle(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta + std::numbers::pi, two_pi);
    if (t <= 0.0) t += two_pi;
    return t - std::numbers::pi;
}

double point_segment_distance(const Point& p, const Segment& s) {
    const double dx = s.b.x - s.a.x;
    const double dy = s.b.y - s.a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return distance(p, s.a);
    double t = ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, Point{s.a.x + t * dx, s.a.y + t * dy});
}

namespace {

int orientation_sign(const Point& a, const Point& b, const Point& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > 1e-12) return 1;
    if (v < -1e-12) return -1;
    return 0;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) - 1e-12 <= p.x && p.x <= std::max(a.x, b.x) + 1e-12 &&
           std::min(a.y, b.y) - 1e-12 <= p.y && p.y <= std::max(a.y, b.y) + 1e-12;
}

bool segments_properly_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    const int o1 = orientation_sign(p1, p2, q1);
    const int o2 = orientation_sign(p1, p2, q2);
    const int o3 = orientation_sign(q1, q2, p1);
    const int o4 = orientation_sign(q1, q2, p2);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

bool segments_touch(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    if (segments_properly_intersect(p1, p2, q1, q2)) return true;
    if (orientation_sign(p1, p2, q1) == 0 && on_segment(p1, p2, q1)) return true;
    if (orientation_sign(p1, p2, q2) == 0 && on_segment(p1, p2, q2)) return true;
    if (orientation_sign(q1, q2, p1) == 0 && on_segment(q1, q2, p1)) return true;
    if (orientation_sign(q1, q2, p2) == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

} // namespace

bool point_in_polygon(const Point& p, const std::vector<Point>& polygon) {
    const size_t n = polygon.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        if (orientation_sign(a, b, p) == 0 && on_segment(a, b, p)) return true;
    }
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = polygon[i];
        const Point& b = polygon[j];
        const bool crosses = (a.y > p.y) != (b.y > p.y);
        if (crosses) {
            const double x_at = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < x_at) inside = !inside;
        }
    }
    return inside;
}

bool polygon_is_simple(const std::vector<Point>& polygon) {
    const size_t n = polygon.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_touch(polygon[i], polygon[(i + 1) % n], polygon[j], polygon[(j + 1) % n]))
                return false;
        }
    }
    return true;
}

bool polygons_overlap(const std::vector<Point>& a, const std::vector<Point>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (segments_properly_intersect(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()]))
                return true;
    // one fully inside the other: test a strictly-interior probe point
    auto centroid = [](const std::vector<Point>& poly) {
        Point c;
        for (const auto& p : poly) { c.x += p.x; c.y += p.y; }
        c.x /= static_cast<double>(poly.size());
        c.y /= static_cast<double>(poly.size());
        return c;
    };
    if (point_in_polygon(centroid(a), b) && point_in_polygon(centroid(a), a)) return true;
    if (point_in_polygon(centroid(b), a) && point_in_polygon(centroid(b), b)) return true;
    return false;
}

} // namespace dynacon
