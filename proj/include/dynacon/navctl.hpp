#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dynacon/perception.hpp"
#include "dynacon/planning.hpp"
#include "dynacon/reasoning.hpp"
#include "dynacon/world.hpp"

namespace dynacon {

struct ExecParams {
    double standoff = 0.5;        // stop short of the target object
    double success_radius = 1.0;  // for room-number goals
    double visited_radius = 0.7;
    int idle_fail_ticks = 100;

    static ExecParams from_json(const std::string& json_text);
    static ExecParams from_json(const std::string& json_text, const ExecParams& base);
};

enum class TrialStatus { running, success, failure };
enum class FailReason { none, timeout, idle, backend };

struct Termination {
    TrialStatus status = TrialStatus::running;
    FailReason reason = FailReason::none;
};

std::string to_string(TrialStatus s);
std::string to_string(FailReason r);

// Target position for a verdict: the desired object's snapshot position
// pulled `standoff` toward the robot and clamped to a free cell; for a None
// verdict, the nearest detected object not yet visited (the exploratory
// fallback), or nothing when no candidate remains.
std::optional<Point> resolve_goal(const ReasoningVerdict& verdict, const ObjectList& list,
                                  const Pose& pose, const std::set<std::string>& visited,
                                  const OccupancyGrid& grid, const ExecParams& params);

// Success/failure decision for the current state.
Termination check_termination(const Pose& pose, int tick, int idle_ticks,
                              const ScenarioSpec& scenario, const ExecParams& params);

// One trace record per tick.
struct TickRecord {
    int tick = 0;
    Pose pose;
    VelocityCommand cmd;
    uint64_t list_hash = 0;
    bool has_verdict = false;
    std::optional<std::string> verdict; // meaningful when has_verdict
    std::optional<Point> goal_point;
    std::vector<std::string> list_names;
};

// Closes the loop sense -> (re)reason -> resolve goal -> plan -> act on a
// tick clock and accumulates the trial history.
class Executive {
public:
    Executive(const ScenarioSpec& scenario, const BackendConfig& backend);

    // Advances one tick; backend errors propagate to the caller.
    TickRecord step();

    Termination termination() const;
    int tick() const { return tick_; }
    const Pose& pose() const { return pose_; }
    const ObjectList& current_list() const { return server_.current(); }
    int queries_issued() const { return session_.queries_issued(); }
    int replans() const { return replans_; }

    const std::vector<ReasoningVerdict>& verdict_history() const { return verdict_history_; }
    const std::vector<ObjectList>& list_history() const { return list_history_; }

private:
    void adopt_target(const std::optional<std::string>& target_object,
                      const ReasoningVerdict& verdict);
    void maybe_replan(const Point& goal);

    ScenarioSpec scenario_;
    ExecParams exec_params_;
    DwaParams dwa_params_;
    ObjectServer server_;
    ReasoningSession session_;
    ClearanceField clearance_;

    int tick_ = 0;
    Pose pose_;
    VelocityCommand vel_;
    std::optional<ReasoningVerdict> verdict_;
    std::optional<std::string> target_object_;
    std::optional<Point> goal_point_;
    std::optional<PotentialField> field_;
    std::set<std::string> visited_;
    std::map<std::string, Point> known_positions_;
    int idle_ticks_ = 0;
    bool query_wanted_ = false;
    bool list_dirty_while_busy_ = false;
    int replans_ = 0;

    std::vector<ReasoningVerdict> verdict_history_;
    std::vector<ObjectList> list_history_;
};

} // namespace dynacon
