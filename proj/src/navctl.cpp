#include "dynacon/navctl.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include <json.hpp>

#include "dynacon/errors.hpp"

namespace dynacon {

ExecParams ExecParams::from_json(const std::string& json_text) {
    return from_json(json_text, ExecParams{});
}

ExecParams ExecParams::from_json(const std::string& json_text, const ExecParams& base) {
    ExecParams p = base;
    if (json_text.empty()) return p;
    const auto j = nlohmann::json::parse(json_text);
    p.standoff = j.value("standoff", p.standoff);
    p.success_radius = j.value("success_radius", p.success_radius);
    p.visited_radius = j.value("visited_radius", p.visited_radius);
    p.idle_fail_ticks = j.value("idle_fail_ticks", p.idle_fail_ticks);
    return p;
}

std::string to_string(TrialStatus s) {
    switch (s) {
        case TrialStatus::running: return "running";
        case TrialStatus::success: return "success";
        case TrialStatus::failure: return "failure";
    }
    return "running";
}

std::string to_string(FailReason r) {
    switch (r) {
        case FailReason::none: return "none";
        case FailReason::timeout: return "timeout";
        case FailReason::idle: return "idle";
        case FailReason::backend: return "backend";
    }
    return "none";
}

namespace {

// Center of the nearest free cell, searched outward from the point's cell.
std::optional<Point> nearest_free_cell(const OccupancyGrid& grid, const Point& p) {
    const int sx = std::clamp(grid.cell_x(p.x), 0, grid.cols - 1);
    const int sy = std::clamp(grid.cell_y(p.y), 0, grid.rows - 1);
    if (!grid.is_occupied(sx, sy)) return grid.center(sx, sy);
    std::vector<uint8_t> seen(static_cast<size_t>(grid.cols) * grid.rows, 0);
    std::queue<std::pair<int, int>> queue;
    queue.push({sx, sy});
    seen[static_cast<size_t>(sy) * grid.cols + sx] = 1;
    while (!queue.empty()) {
        const auto [x, y] = queue.front();
        queue.pop();
        if (!grid.is_occupied(x, y)) return grid.center(x, y);
        constexpr int dx[4] = {1, -1, 0, 0};
        constexpr int dy[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const int nx = x + dx[k];
            const int ny = y + dy[k];
            if (!grid.in_bounds(nx, ny)) continue;
            auto& mark = seen[static_cast<size_t>(ny) * grid.cols + nx];
            if (mark) continue;
            mark = 1;
            queue.push({nx, ny});
        }
    }
    return std::nullopt;
}

std::optional<Point> standoff_point(const Point& object, const Pose& pose,
                                    const OccupancyGrid& grid, double standoff) {
    const double d = distance(object, pose.position());
    Point g;
    if (d <= standoff) {
        g = pose.position();
    } else {
        const double ux = (pose.x - object.x) / d;
        const double uy = (pose.y - object.y) / d;
        g = {object.x + standoff * ux, object.y + standoff * uy};
    }
    if (grid.point_free(g)) return g;
    return nearest_free_cell(grid, g);
}

} // namespace

std::optional<Point> resolve_goal(const ReasoningVerdict& verdict, const ObjectList& list,
                                  const Pose& pose, const std::set<std::string>& visited,
                                  const OccupancyGrid& grid, const ExecParams& params) {
    if (verdict.desired_object) {
        const auto it = list.positions.find(*verdict.desired_object);
        if (it == list.positions.end()) return std::nullopt;
        return standoff_point(it->second, pose, grid, params.standoff);
    }
    // None: head for the nearest detected object we have not visited yet
    std::optional<std::string> best;
    double best_dist = 0.0;
    for (const auto& name : list.names) {
        if (visited.count(name)) continue;
        const double d = distance(pose.position(), list.positions.at(name));
        if (!best || d < best_dist) {
            best = name;
            best_dist = d;
        }
    }
    if (!best) return std::nullopt;
    return standoff_point(list.positions.at(*best), pose, grid, params.standoff);
}

Termination check_termination(const Pose& pose, int tick, int idle_ticks,
                              const ScenarioSpec& scenario, const ExecParams& params) {
    if (scenario.goal.kind == GoalCommand::Kind::room_number) {
        for (const auto& obj : scenario.world.objects) {
            if (obj.kind.is_plate() && obj.kind.plate_number == scenario.goal.room_number &&
                distance(pose.position(), obj.position) <= params.success_radius)
                return {TrialStatus::success, FailReason::none};
        }
    } else {
        for (const auto& region : scenario.world.regions) {
            if (region.category == scenario.goal.category &&
                point_in_polygon(pose.position(), region.polygon))
                return {TrialStatus::success, FailReason::none};
        }
    }
    if (idle_ticks >= params.idle_fail_ticks) return {TrialStatus::failure, FailReason::idle};
    if (tick >= scenario.max_ticks) return {TrialStatus::failure, FailReason::timeout};
    return {TrialStatus::running, FailReason::none};
}

Executive::Executive(const ScenarioSpec& scenario, const BackendConfig& backend)
    : scenario_(scenario),
      exec_params_(ExecParams::from_json(scenario.executive_json)),
      dwa_params_(DwaParams::from_json(scenario.planner_json)),
      server_(scenario_.world, scenario.sensor),
      session_(scenario.goal, backend),
      clearance_(ClearanceField::build(scenario_.world.grid)),
      pose_(scenario.start) {
    scenario_.validate();
}

void Executive::maybe_replan(const Point& goal) {
    const OccupancyGrid& grid = scenario_.world.grid;
    const Cell goal_cell{std::clamp(grid.cell_x(goal.x), 0, grid.cols - 1),
                         std::clamp(grid.cell_y(goal.y), 0, grid.rows - 1)};
    if (field_) {
        const int moved = std::max(std::abs(field_->goal.x - goal_cell.x),
                                   std::abs(field_->goal.y - goal_cell.y));
        if (moved <= 1) return; // goal still in the same neighborhood
    }
    field_ = plan_potential(grid, goal_cell);
    ++replans_;
}

void Executive::adopt_target(const std::optional<std::string>& target_object,
                             const ReasoningVerdict& verdict) {
    target_object_ = target_object;
    ObjectList list = server_.current();
    if (verdict.desired_object && !list.contains(*verdict.desired_object)) {
        // a delayed verdict may name an object that has left the list; fall
        // back to its last known snapshot position
        const auto it = known_positions_.find(*verdict.desired_object);
        if (it != known_positions_.end()) {
            list.names.push_back(it->first);
            list.positions[it->first] = it->second;
        }
    }
    const auto goal = resolve_goal(verdict, list, pose_, visited_,
                                   scenario_.world.grid, exec_params_);
    goal_point_ = goal;
    if (goal) maybe_replan(*goal);
}

TickRecord Executive::step() {
    const OccupancyGrid& grid = scenario_.world.grid;

    // 1. sense on the sensor period; a membership change requests reasoning
    const bool changed = server_.update(pose_, tick_);
    if (changed) {
        list_history_.push_back(server_.current());
        known_positions_.insert(server_.current().positions.begin(),
                                server_.current().positions.end());
        if (session_.busy())
            list_dirty_while_busy_ = true;
        else
            query_wanted_ = true;
    }

    // 2. at most one outstanding query; re-query when the list moved on meanwhile
    if (query_wanted_ && !session_.busy()) {
        session_.submit(server_.current(), verdict_ ? verdict_->desired_object : std::nullopt,
                        tick_);
        query_wanted_ = false;
    }
    if (auto delivered = session_.poll(tick_)) {
        verdict_ = std::move(*delivered);
        verdict_history_.push_back(*verdict_);
        adopt_target(verdict_->desired_object, *verdict_);
        if (list_dirty_while_busy_) {
            list_dirty_while_busy_ = false;
            query_wanted_ = true;
        }
    }

    // 3. a None verdict falls back to exploring unvisited detections; the
    //    candidate can change as the robot moves or marks objects visited
    if (verdict_ && !verdict_->desired_object) {
        const auto goal = resolve_goal(*verdict_, server_.current(), pose_, visited_, grid,
                                       exec_params_);
        goal_point_ = goal;
        if (goal) maybe_replan(*goal);
    }

    // 4. drive toward the goal point, if any
    VelocityCommand cmd;
    if (goal_point_ && field_) {
        idle_ticks_ = 0;
        const Cell robot_cell{std::clamp(grid.cell_x(pose_.x), 0, grid.cols - 1),
                              std::clamp(grid.cell_y(pose_.y), 0, grid.rows - 1)};
        if (field_->reachable(robot_cell)) {
            const Path path = extract_path(*field_, robot_cell);
            cmd = dwa_step(pose_, vel_, path, grid, clearance_, dwa_params_);
            pose_ = step_kinematics(pose_, cmd, dwa_params_.dt);
        } else {
            goal_point_.reset(); // goal unreachable from here; wait for new input
        }
    } else {
        ++idle_ticks_;
    }
    vel_ = cmd;

    // 5. objects the robot passes close to count as visited
    for (const auto& name : server_.current().names)
        if (distance(pose_.position(), server_.current().positions.at(name)) <=
            exec_params_.visited_radius)
            visited_.insert(name);

    TickRecord rec;
    rec.tick = tick_;
    rec.pose = pose_;
    rec.cmd = cmd;
    rec.list_hash = object_list_hash(server_.current());
    rec.list_names = server_.current().names;
    rec.has_verdict = verdict_.has_value();
    if (verdict_) rec.verdict = verdict_->desired_object;
    rec.goal_point = goal_point_;
    ++tick_;
    return rec;
}

Termination Executive::termination() const {
    return check_termination(pose_, tick_, idle_ticks_, scenario_, exec_params_);
}

} // namespace dynacon
