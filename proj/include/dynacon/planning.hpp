#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynacon/geometry.hpp"
#include "dynacon/world.hpp"

namespace dynacon {

struct Cell {
    int x = 0;
    int y = 0;
    bool operator==(const Cell&) const = default;
};

// Cost-to-goal over the grid; unreachable cells hold +infinity.
struct PotentialField {
    int cols = 0;
    int rows = 0;
    double resolution = kDefaultResolution;
    Cell goal;
    std::vector<double> cost; // row-major

    double at(const Cell& c) const { return cost[static_cast<size_t>(c.y) * cols + c.x]; }
    bool reachable(const Cell& c) const;
};

// Dijkstra over 8-connected free cells; step cost is the Euclidean cell
// distance times resolution.
PotentialField plan_potential(const OccupancyGrid& grid, const Cell& goal_cell);

struct Path {
    std::vector<Point> waypoints; // cell centers, start first
    bool empty() const { return waypoints.empty(); }
};

// Steepest-descent walk from the start cell down the potential field.
Path extract_path(const PotentialField& field, const Cell& start_cell);

struct VelocityCommand {
    double v = 0.0; // m/s
    double w = 0.0; // rad/s
    // set on the all-rollouts-collide recovery branch (in-place rotation)
    bool recovery = false;
};

struct DwaParams {
    double v_max = 0.6;
    double w_max = 1.5;
    double accel_v = 1.0;
    double accel_w = 2.0;
    double dt = 0.1;          // control period, seconds
    double horizon = 1.5;     // rollout length, seconds
    int samples_v = 11;
    int samples_w = 21;
    double heading_weight = 1.0;
    double clearance_weight = 0.5;
    double velocity_weight = 0.2;
    double carrot_distance = 0.8; // look-ahead along the path
    // Clearance saturates once a rollout keeps this much margin (walls are
    // already inflated by the robot radius); a larger cap lets the clearance
    // term dominate progress and stall the robot short of wall-adjacent goals.
    double clearance_cap = 0.35;

    void validate() const;
    // Overrides fields present in a JSON object text (the scenario `planner` key).
    static DwaParams from_json(const std::string& json_text);
    static DwaParams from_json(const std::string& json_text, const DwaParams& base);
};

// Distance (meters) from each cell center to the nearest occupied cell,
// computed once per grid and reused by the clearance score.
struct ClearanceField {
    int cols = 0;
    int rows = 0;
    double resolution = kDefaultResolution;
    std::vector<double> dist;

    double at_point(const Point& p) const;
    static ClearanceField build(const OccupancyGrid& grid);
};

// One DWA step: sample the dynamic window, roll each command out over the
// horizon, drop colliding rollouts, and score the rest by heading to the
// carrot waypoint, clearance, and forward velocity. Falls back to an
// in-place rotation toward the carrot when every rollout collides.
VelocityCommand dwa_step(const Pose& pose, const VelocityCommand& current, const Path& path,
                         const OccupancyGrid& grid, const ClearanceField& clearance,
                         const DwaParams& params);

// Exact constant-twist arc update of a differential-drive pose.
Pose step_kinematics(const Pose& pose, const VelocityCommand& cmd, double dt);

// Carrot selection: first waypoint at least look_ahead past the closest
// path point to the pose (pure-pursuit style).
Point carrot_waypoint(const Path& path, const Pose& pose, double look_ahead);

// True when the rollout of cmd from pose over the horizon stays in free cells.
bool rollout_collision_free(const Pose& pose, const VelocityCommand& cmd,
                            const OccupancyGrid& grid, const DwaParams& params);

} // namespace dynacon
