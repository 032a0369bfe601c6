#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynacon/builtin_worlds.hpp"
#include "dynacon/errors.hpp"
#include "dynacon/harness.hpp"
#include "dynacon/prompting.hpp"
#include "dynacon/scenario_io.hpp"

namespace {

using namespace dynacon;

BackendConfig backend_from_name(const std::string& name) {
    BackendConfig config;
    if (name == "oracle") {
        config.kind = BackendKind::oracle;
    } else if (name == "llm") {
        config.kind = BackendKind::llm;
    } else {
        throw InvalidParameterError("unknown backend '" + name + "' (expected oracle|llm)");
    }
    return config;
}

// Expected-status manifest: {"<scenario id>": "success" | "failure" | "failure(<reason>)"}
std::map<std::string, std::string> load_expect_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open expect manifest: " + path);
    nlohmann::json j;
    in >> j;
    std::map<std::string, std::string> expected;
    for (const auto& [key, value] : j.items()) expected[key] = value.get<std::string>();
    return expected;
}

bool status_matches(const std::string& expected, const TrialResult& result) {
    if (expected == "success" || expected == "failure")
        return expected == to_string(result.status);
    return expected == result.status_string();
}

int check_expectations(const std::map<std::string, std::string>& expected,
                       const std::vector<const TrialResult*>& results) {
    int mismatches = 0;
    for (const auto* result : results) {
        const auto it = expected.find(result->scenario_id);
        if (it == expected.end()) continue;
        if (!status_matches(it->second, *result)) {
            std::cerr << "expectation failed: " << result->scenario_id << " is "
                      << result->status_string() << ", expected " << it->second << "\n";
            ++mismatches;
        }
    }
    return mismatches;
}

int run_command(const std::string& scenario_path, const std::string& backend_name,
                const std::string& trace_path, unsigned seed, const std::string& expect_path) {
    const ScenarioSpec spec = load_scenario(scenario_path);
    const TrialResult result = run_trial(spec, backend_from_name(backend_name), seed, trace_path);
    std::cout << spec.name << ": " << result.status_string() << " after " << result.ticks_used
              << " ticks\n";
    if (!expect_path.empty())
        return check_expectations(load_expect_manifest(expect_path), {&result}) == 0 ? 0 : 1;
    return 0;
}

int suite_command(const std::string& set_name, const std::string& backend_name,
                  const std::string& report_name, const std::string& out_dir,
                  const std::string& expect_path) {
    const SuiteReport report = run_suite(set_name, backend_from_name(backend_name));
    std::cout << render_report(report, report_format_from_string(report_name), out_dir);
    if (!expect_path.empty()) {
        std::vector<const TrialResult*> results;
        for (const auto& row : report.rows) results.push_back(&row.result);
        return check_expectations(load_expect_manifest(expect_path), results) == 0 ? 0 : 1;
    }
    return 0;
}

int ablation_command(const std::string& out_dir) {
    const AblationFixtures fixtures = ablation_fixtures();
    write_ablation_fixtures(fixtures, out_dir);
    auto show = [](const AblationScenario& s) {
        std::cout << s.id << " expected sequence:";
        for (const auto& v : s.expected_sequence) std::cout << " " << v;
        std::cout << "\n";
    };
    show(fixtures.pattern);
    show(fixtures.categorical);
    std::cout << "fixtures written to " << out_dir << "\n";
    return 0;
}

// Regenerates the bundled scenario and prompt fixtures.
int fixtures_command(const std::string& out_dir) {
    namespace fs = std::filesystem;
    const fs::path scenarios = fs::path(out_dir) / "scenarios";
    const fs::path prompts = fs::path(out_dir) / "prompts";
    const fs::path config = fs::path(out_dir) / "config";
    fs::create_directories(scenarios);
    fs::create_directories(prompts);
    fs::create_directories(config);

    for (const auto& suite : {"pattern", "category"})
        for (const auto& spec : suite_scenarios(suite))
            save_scenario(spec, (scenarios / (spec.name + ".json")).string());

    auto dump = [](const fs::path& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary);
        out << text;
    };
    dump(prompts / "pattern_room_202.txt",
         build_reasoning_prompt(GoalCommand::number(202), ReasoningMode::pattern).rendered);
    dump(prompts / "categorical_kitchen.txt",
         build_reasoning_prompt(GoalCommand::room(RoomCategory::kitchen),
                                ReasoningMode::categorical).rendered);
    dump(prompts / "unstructured.txt", build_unstructured_prompt(GoalCommand::number(202)));

    nlohmann::json defaults;
    const DwaParams dwa;
    defaults["planner"] = {
        {"v_max", dwa.v_max},         {"w_max", dwa.w_max},
        {"accel_v", dwa.accel_v},     {"accel_w", dwa.accel_w},
        {"dt", dwa.dt},               {"horizon", dwa.horizon},
        {"samples_v", dwa.samples_v}, {"samples_w", dwa.samples_w},
        {"heading_weight", dwa.heading_weight},
        {"clearance_weight", dwa.clearance_weight},
        {"velocity_weight", dwa.velocity_weight},
        {"carrot_distance", dwa.carrot_distance},
        {"clearance_cap", dwa.clearance_cap},
    };
    const ExecParams exec;
    defaults["executive"] = {
        {"standoff", exec.standoff},
        {"success_radius", exec.success_radius},
        {"visited_radius", exec.visited_radius},
        {"idle_fail_ticks", exec.idle_fail_ticks},
    };
    const SensorParams sensor;
    defaults["sensor"] = {
        {"range", sensor.range},
        {"occlusion", sensor.occlusion},
        {"period_ticks", sensor.period_ticks},
    };
    dump(config / "defaults.json", defaults.dump(2) + "\n");

    std::cout << "fixtures written to " << out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Context-aware map-free navigation simulator"};
    app.require_subcommand(1);

    std::string scenario_path, trace_path, expect_path;
    std::string backend_name = "oracle";
    unsigned seed = 0;
    auto* run = app.add_subcommand("run", "Run a single scenario");
    run->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    run->add_option("--backend", backend_name, "oracle|llm");
    run->add_option("--trace", trace_path, "Write a JSONL trace");
    run->add_option("--seed", seed, "Seed recorded for the trial");
    run->add_option("--expect", expect_path, "Expected-status manifest");

    std::string set_name, report_name = "table", out_dir = "reports", suite_expect;
    std::string suite_backend = "oracle";
    auto* suite = app.add_subcommand("suite", "Run a scenario suite");
    suite->add_option("--set", set_name, "pattern|category")->required();
    suite->add_option("--backend", suite_backend, "oracle|llm");
    suite->add_option("--report", report_name, "table|jsonl|svg-traj");
    suite->add_option("--out", out_dir, "Output directory for svg-traj");
    suite->add_option("--expect", suite_expect, "Expected-status manifest");

    std::string ablation_out = "ablation";
    auto* ablation = app.add_subcommand("ablation", "Emit the prompt ablation fixtures");
    ablation->add_option("--out", ablation_out, "Output directory");

    std::string fixtures_out = "fixtures";
    auto* fixtures = app.add_subcommand("fixtures", "Regenerate bundled fixtures");
    fixtures->add_option("--out", fixtures_out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_command(scenario_path, backend_name, trace_path, seed, expect_path);
        if (suite->parsed())
            return suite_command(set_name, suite_backend, report_name, out_dir, suite_expect);
        if (ablation->parsed()) return ablation_command(ablation_out);
        if (fixtures->parsed()) return fixtures_command(fixtures_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
