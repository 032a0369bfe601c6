#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynacon/navctl.hpp"
#include "dynacon/prompting.hpp"
#include "dynacon/reasoning.hpp"
#include "dynacon/trace.hpp"
#include "dynacon/world.hpp"

namespace dynacon {

struct TrialResult {
    std::string scenario_id;
    TrialStatus status = TrialStatus::failure;
    FailReason fail_reason = FailReason::none;
    int ticks_used = 0;
    std::vector<Pose> trajectory;
    std::vector<ReasoningVerdict> verdict_history;
    std::vector<ObjectList> list_history;
    std::vector<TickRecord> records;

    bool succeeded() const { return status == TrialStatus::success; }
    std::string status_string() const;
};

struct SuiteRow {
    int test_number = 0;
    std::string world_label;   // "Corridor 1", "House 2", ...
    std::string detail_label;  // initial point tag or goal room
    TrialResult result;
};

struct SuiteReport {
    std::string suite_name;
    std::vector<SuiteRow> rows;
    double success_rate = 0.0; // percent, one decimal

    static double rate_percent(int successes, int trials);
};

// Drives the executive to termination. Deterministic under the oracle
// backend; backend errors become failure(backend).
TrialResult run_trial(const ScenarioSpec& scenario, const BackendConfig& backend,
                      unsigned seed = 0, const std::string& trace_path = "");

// The 8 pattern trials (corridors) or 8 categorical trials (houses).
std::vector<ScenarioSpec> suite_scenarios(const std::string& suite_name);
SuiteReport run_suite(const std::string& suite_name, const BackendConfig& backend);

// Prompt fixtures plus the deterministic oracle verdict sequences for the two
// reference scenarios (pattern toward room 202, category toward the kitchen).
struct AblationScenario {
    std::string id;
    GoalCommand goal;
    ReasoningMode mode;
    std::vector<ObjectList> timesteps;
    PromptBundle structured;
    std::string unstructured;
    std::vector<std::string> expected_sequence; // oracle verdict per timestep
};

struct AblationFixtures {
    AblationScenario pattern;
    AblationScenario categorical;
};

AblationFixtures ablation_fixtures();
void write_ablation_fixtures(const AblationFixtures& fixtures, const std::string& out_dir);

enum class ReportFormat { table, jsonl, svg_traj };
ReportFormat report_format_from_string(const std::string& s);

// table: Test/World/Goal-Initial/Task/Success-Rate rows; jsonl: one record per
// trial; svg_traj: one SVG per trial drawn into out_dir.
std::string render_report(const SuiteReport& report, ReportFormat format,
                          const std::string& out_dir = "");

// Trajectory drawing for a single trial (walls, objects, start circle, goal
// star, path polyline).
std::string render_trajectory_svg(const ScenarioSpec& scenario, const TrialResult& result);

} // namespace dynacon
