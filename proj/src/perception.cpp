#include "dynacon/perception.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "dynacon/errors.hpp"

namespace dynacon {

bool walk_ray_cells(const OccupancyGrid& grid, const Point& a, const Point& b,
                    const std::function<bool(int, int)>& visit) {
    // Amanatides-Woo traversal; visits the supercover of the segment.
    int cx = grid.cell_x(a.x);
    int cy = grid.cell_y(a.y);
    const int ex = grid.cell_x(b.x);
    const int ey = grid.cell_y(b.y);
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const int step_x = dx > 0 ? 1 : (dx < 0 ? -1 : 0);
    const int step_y = dy > 0 ? 1 : (dy < 0 ? -1 : 0);
    const double res = grid.resolution;

    auto boundary = [&](int cell, int step) {
        return (cell + (step > 0 ? 1 : 0)) * res;
    };
    double t_max_x = step_x != 0 ? (boundary(cx, step_x) - a.x) / dx
                                 : std::numeric_limits<double>::infinity();
    double t_max_y = step_y != 0 ? (boundary(cy, step_y) - a.y) / dy
                                 : std::numeric_limits<double>::infinity();
    const double t_delta_x = step_x != 0 ? res / std::abs(dx) : 0.0;
    const double t_delta_y = step_y != 0 ? res / std::abs(dy) : 0.0;

    for (int guard = 0; guard < grid.cols * grid.rows + 4; ++guard) {
        if (!visit(cx, cy)) return false;
        if (cx == ex && cy == ey) return true;
        if (t_max_x < t_max_y) {
            cx += step_x;
            t_max_x += t_delta_x;
        } else if (t_max_y < t_max_x) {
            cy += step_y;
            t_max_y += t_delta_y;
        } else {
            // exact corner: cover both adjacent cells
            if (step_x != 0 && !visit(cx + step_x, cy)) return false;
            if (step_y != 0 && !visit(cx, cy + step_y)) return false;
            cx += step_x;
            cy += step_y;
            t_max_x += t_delta_x;
            t_max_y += t_delta_y;
        }
        if (!grid.in_bounds(cx, cy)) return true; // left the grid; nothing more to see
    }
    return true;
}

bool line_of_sight(const OccupancyGrid& grid, const Point& a, const Point& b) {
    bool clear = true;
    walk_ray_cells(grid, a, b, [&](int cx, int cy) {
        if (grid.in_bounds(cx, cy) && grid.is_occupied(cx, cy)) {
            clear = false;
            return false;
        }
        return true;
    });
    return clear;
}

ObjectList sense(const OccupancyWorld& world, const Pose& pose, const SensorParams& params,
                 int tick) {
    if (!world.grid.point_free(pose.position()))
        throw InvalidParameterError("sense: pose lies in occupied space");
    ObjectList list;
    list.tick = tick;
    for (const auto& obj : world.objects) {
        if (distance(pose.position(), obj.position) > params.range) continue;
        if (params.occlusion && !line_of_sight(world.grid, pose.position(), obj.position))
            continue;
        list.names.push_back(obj.name);
        list.positions[obj.name] = obj.position;
    }
    std::sort(list.names.begin(), list.names.end());
    return list;
}

bool list_changed(const ObjectList& prev, const ObjectList& curr) {
    return prev.names != curr.names;
}

uint64_t object_list_hash(const ObjectList& list) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](char c) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    };
    for (const auto& name : list.names) {
        for (char c : name) mix(c);
        mix('\x1f');
    }
    return h;
}

bool ObjectServer::update(const Pose& pose, int tick) {
    if (primed_ && tick % params_.period_ticks != 0) return false;
    ObjectList next = sense(*world_, pose, params_, tick);
    const bool changed = !primed_ || list_changed(current_, next);
    current_ = std::move(next);
    primed_ = true;
    return changed;
}

} // namespace dynacon
