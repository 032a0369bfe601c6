#include "dynacon/planning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include <json.hpp>

#include "dynacon/errors.hpp"

namespace dynacon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Neighbor {
    int dx;
    int dy;
    double step; // cells
};

constexpr Neighbor kNeighbors[8] = {
    {1, 0, 1.0},  {-1, 0, 1.0}, {0, 1, 1.0},  {0, -1, 1.0},
    {1, 1, std::numbers::sqrt2},  {1, -1, std::numbers::sqrt2},
    {-1, 1, std::numbers::sqrt2}, {-1, -1, std::numbers::sqrt2},
};

} // namespace

bool PotentialField::reachable(const Cell& c) const {
    return std::isfinite(at(c));
}

PotentialField plan_potential(const OccupancyGrid& grid, const Cell& goal_cell) {
    if (!grid.in_bounds(goal_cell.x, goal_cell.y) || grid.is_occupied(goal_cell.x, goal_cell.y))
        throw InvalidParameterError("plan_potential: goal cell occupied or out of bounds");

    PotentialField field;
    field.cols = grid.cols;
    field.rows = grid.rows;
    field.resolution = grid.resolution;
    field.goal = goal_cell;
    field.cost.assign(static_cast<size_t>(grid.cols) * grid.rows, kInf);

    auto index = [&](int x, int y) { return static_cast<size_t>(y) * grid.cols + x; };
    using Entry = std::pair<double, std::pair<int, int>>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    field.cost[index(goal_cell.x, goal_cell.y)] = 0.0;
    queue.push({0.0, {goal_cell.x, goal_cell.y}});

    while (!queue.empty()) {
        const auto [d, cell] = queue.top();
        queue.pop();
        const auto [x, y] = cell;
        if (d > field.cost[index(x, y)]) continue;
        for (const auto& n : kNeighbors) {
            const int nx = x + n.dx;
            const int ny = y + n.dy;
            if (!grid.in_bounds(nx, ny) || grid.is_occupied(nx, ny)) continue;
            const double nd = d + n.step * grid.resolution;
            if (nd < field.cost[index(nx, ny)]) {
                field.cost[index(nx, ny)] = nd;
                queue.push({nd, {nx, ny}});
            }
        }
    }
    return field;
}

Path extract_path(const PotentialField& field, const Cell& start_cell) {
    if (start_cell.x < 0 || start_cell.x >= field.cols || start_cell.y < 0 ||
        start_cell.y >= field.rows || !field.reachable(start_cell))
        throw NoPathError("extract_path: start cell has infinite potential");

    Path path;
    Cell cur = start_cell;
    path.waypoints.push_back({(cur.x + 0.5) * field.resolution, (cur.y + 0.5) * field.resolution});
    while (!(cur == field.goal)) {
        Cell best = cur;
        double best_cost = field.at(cur);
        for (const auto& n : kNeighbors) {
            const Cell cand{cur.x + n.dx, cur.y + n.dy};
            if (cand.x < 0 || cand.x >= field.cols || cand.y < 0 || cand.y >= field.rows) continue;
            const double c = field.at(cand);
            if (c < best_cost) {
                best_cost = c;
                best = cand;
            }
        }
        if (best == cur) throw NoPathError("extract_path: descent stalled"); // cannot happen on a valid field
        cur = best;
        path.waypoints.push_back({(cur.x + 0.5) * field.resolution, (cur.y + 0.5) * field.resolution});
    }
    return path;
}

void DwaParams::validate() const {
    if (v_max <= 0 || w_max <= 0 || accel_v <= 0 || accel_w <= 0 || dt <= 0 || horizon <= 0)
        throw InvalidParameterError("DwaParams: limits, accelerations, dt and horizon must be > 0");
    if (samples_v < 2 || samples_w < 2)
        throw InvalidParameterError("DwaParams: need at least 2 samples per axis");
    if (heading_weight < 0 || clearance_weight < 0 || velocity_weight < 0)
        throw InvalidParameterError("DwaParams: weights must be non-negative");
}

DwaParams DwaParams::from_json(const std::string& json_text) {
    return from_json(json_text, DwaParams{});
}

DwaParams DwaParams::from_json(const std::string& json_text, const DwaParams& base) {
    DwaParams p = base;
    if (json_text.empty()) return p;
    const auto j = nlohmann::json::parse(json_text);
    p.v_max = j.value("v_max", p.v_max);
    p.w_max = j.value("w_max", p.w_max);
    p.accel_v = j.value("accel_v", p.accel_v);
    p.accel_w = j.value("accel_w", p.accel_w);
    p.dt = j.value("dt", p.dt);
    p.horizon = j.value("horizon", p.horizon);
    p.samples_v = j.value("samples_v", p.samples_v);
    p.samples_w = j.value("samples_w", p.samples_w);
    p.heading_weight = j.value("heading_weight", p.heading_weight);
    p.clearance_weight = j.value("clearance_weight", p.clearance_weight);
    p.velocity_weight = j.value("velocity_weight", p.velocity_weight);
    p.carrot_distance = j.value("carrot_distance", p.carrot_distance);
    p.clearance_cap = j.value("clearance_cap", p.clearance_cap);
    p.validate();
    return p;
}

double ClearanceField::at_point(const Point& p) const {
    const int cx = std::clamp(static_cast<int>(std::floor(p.x / resolution)), 0, cols - 1);
    const int cy = std::clamp(static_cast<int>(std::floor(p.y / resolution)), 0, rows - 1);
    return dist[static_cast<size_t>(cy) * cols + cx];
}

ClearanceField ClearanceField::build(const OccupancyGrid& grid) {
    ClearanceField f;
    f.cols = grid.cols;
    f.rows = grid.rows;
    f.resolution = grid.resolution;
    f.dist.assign(static_cast<size_t>(grid.cols) * grid.rows, kInf);

    auto index = [&](int x, int y) { return static_cast<size_t>(y) * grid.cols + x; };
    using Entry = std::pair<double, std::pair<int, int>>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (int y = 0; y < grid.rows; ++y)
        for (int x = 0; x < grid.cols; ++x)
            if (grid.is_occupied(x, y)) {
                f.dist[index(x, y)] = 0.0;
                queue.push({0.0, {x, y}});
            }
    while (!queue.empty()) {
        const auto [d, cell] = queue.top();
        queue.pop();
        const auto [x, y] = cell;
        if (d > f.dist[index(x, y)]) continue;
        for (const auto& n : kNeighbors) {
            const int nx = x + n.dx;
            const int ny = y + n.dy;
            if (nx < 0 || nx >= grid.cols || ny < 0 || ny >= grid.rows) continue;
            const double nd = d + n.step * grid.resolution;
            if (nd < f.dist[index(nx, ny)]) {
                f.dist[index(nx, ny)] = nd;
                queue.push({nd, {nx, ny}});
            }
        }
    }
    return f;
}

Pose step_kinematics(const Pose& pose, const VelocityCommand& cmd, double dt) {
    if (dt <= 0.0) throw InvalidParameterError("step_kinematics: dt must be > 0");
    constexpr double kOmegaEps = 1e-9;
    Pose next;
    if (std::abs(cmd.w) < kOmegaEps) {
        next.x = pose.x + cmd.v * std::cos(pose.theta) * dt;
        next.y = pose.y + cmd.v * std::sin(pose.theta) * dt;
        next.theta = pose.theta;
    } else {
        const double radius = cmd.v / cmd.w;
        const double theta1 = pose.theta + cmd.w * dt;
        next.x = pose.x + radius * (std::sin(theta1) - std::sin(pose.theta));
        next.y = pose.y - radius * (std::cos(theta1) - std::cos(pose.theta));
        next.theta = normalize_angle(theta1);
    }
    return next;
}

Point carrot_waypoint(const Path& path, const Pose& pose, double look_ahead) {
    if (path.empty()) throw InvalidParameterError("carrot_waypoint: empty path");
    size_t closest = 0;
    double closest_dist = kInf;
    for (size_t i = 0; i < path.waypoints.size(); ++i) {
        const double d = distance(pose.position(), path.waypoints[i]);
        if (d < closest_dist) {
            closest_dist = d;
            closest = i;
        }
    }
    double walked = 0.0;
    for (size_t i = closest + 1; i < path.waypoints.size(); ++i) {
        walked += distance(path.waypoints[i - 1], path.waypoints[i]);
        if (walked >= look_ahead) return path.waypoints[i];
    }
    return path.waypoints.back();
}

bool rollout_collision_free(const Pose& pose, const VelocityCommand& cmd,
                            const OccupancyGrid& grid, const DwaParams& params) {
    Pose p = pose;
    const int steps = std::max(1, static_cast<int>(std::round(params.horizon / params.dt)));
    for (int i = 0; i < steps; ++i) {
        p = step_kinematics(p, cmd, params.dt);
        if (!grid.point_free(p.position())) return false;
    }
    return true;
}

VelocityCommand dwa_step(const Pose& pose, const VelocityCommand& current, const Path& path,
                         const OccupancyGrid& grid, const ClearanceField& clearance,
                         const DwaParams& params) {
    if (path.empty()) throw InvalidParameterError("dwa_step: empty path");
    params.validate();

    const Point carrot = carrot_waypoint(path, pose, params.carrot_distance);
    const double v_lo = std::max(0.0, current.v - params.accel_v * params.dt);
    const double v_hi = std::min(params.v_max, current.v + params.accel_v * params.dt);
    const double w_lo = std::max(-params.w_max, current.w - params.accel_w * params.dt);
    const double w_hi = std::min(params.w_max, current.w + params.accel_w * params.dt);

    const int steps = std::max(1, static_cast<int>(std::round(params.horizon / params.dt)));
    bool found = false;
    VelocityCommand best;
    double best_score = -kInf;

    for (int iv = 0; iv < params.samples_v; ++iv) {
        const double v = params.samples_v == 1
                             ? v_lo
                             : v_lo + (v_hi - v_lo) * iv / (params.samples_v - 1);
        for (int iw = 0; iw < params.samples_w; ++iw) {
            const double w = params.samples_w == 1
                                 ? w_lo
                                 : w_lo + (w_hi - w_lo) * iw / (params.samples_w - 1);
            const VelocityCommand cmd{v, w, false};

            Pose p = pose;
            double min_clearance = kInf;
            bool collided = false;
            for (int s = 0; s < steps; ++s) {
                p = step_kinematics(p, cmd, params.dt);
                if (!grid.point_free(p.position())) {
                    collided = true;
                    break;
                }
                min_clearance = std::min(min_clearance, clearance.at_point(p.position()));
            }
            if (collided) continue;

            const double to_carrot = std::atan2(carrot.y - p.y, carrot.x - p.x);
            const double heading_err = std::abs(normalize_angle(to_carrot - p.theta));
            const double alignment = (std::numbers::pi - heading_err) / std::numbers::pi;
            // alignment alone is degenerate (tight orbits align at the horizon
            // without ever approaching), so progress toward the carrot counts too
            const double d0 = distance(pose.position(), carrot);
            const double d_end = distance(p.position(), carrot);
            const double progress =
                std::clamp((d0 - d_end) / (params.v_max * params.horizon), 0.0, 1.0);
            const double heading_score = 0.5 * (alignment + progress);
            const double clearance_score =
                std::min(min_clearance, params.clearance_cap) / params.clearance_cap;
            const double velocity_score = v / params.v_max;
            const double score = params.heading_weight * heading_score +
                                 params.clearance_weight * clearance_score +
                                 params.velocity_weight * velocity_score;
            if (score > best_score) { // strict: ties keep the first sample
                best_score = score;
                best = cmd;
                found = true;
            }
        }
    }

    if (found) return best;

    // recovery: rotate in place toward the carrot
    const double to_carrot = std::atan2(carrot.y - pose.y, carrot.x - pose.x);
    const double err = normalize_angle(to_carrot - pose.theta);
    VelocityCommand rec;
    rec.v = 0.0;
    rec.w = (err >= 0.0 ? 1.0 : -1.0) * 0.5 * params.w_max;
    rec.recovery = true;
    return rec;
}

} // namespace dynacon
