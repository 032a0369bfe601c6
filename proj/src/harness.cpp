#include "dynacon/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "dynacon/builtin_worlds.hpp"
#include "dynacon/errors.hpp"

namespace dynacon {

using nlohmann::json;

std::string TrialResult::status_string() const {
    if (status == TrialStatus::success) return "success";
    return "failure(" + to_string(fail_reason) + ")";
}

double SuiteReport::rate_percent(int successes, int trials) {
    if (trials == 0) return 0.0;
    return std::round(1000.0 * successes / trials) / 10.0;
}

TrialResult run_trial(const ScenarioSpec& scenario, const BackendConfig& backend,
                      unsigned /*seed*/, const std::string& trace_path) {
    TrialResult result;
    result.scenario_id = scenario.name;
    result.trajectory.push_back(scenario.start);

    Executive exec(scenario, backend);
    Termination term;
    try {
        while (true) {
            term = exec.termination();
            if (term.status != TrialStatus::running) break;
            result.records.push_back(exec.step());
            result.trajectory.push_back(exec.pose());
        }
        result.status = term.status;
        result.fail_reason = term.reason;
    } catch (const LlmError& e) {
        result.status = TrialStatus::failure;
        result.fail_reason = FailReason::backend;
    } catch (const VerdictParseError& e) {
        result.status = TrialStatus::failure;
        result.fail_reason = FailReason::backend;
    }
    result.ticks_used = exec.tick();
    result.verdict_history = exec.verdict_history();
    result.list_history = exec.list_history();
    if (!trace_path.empty()) write_trace(result.records, trace_path);
    return result;
}

std::vector<ScenarioSpec> suite_scenarios(const std::string& suite_name) {
    std::vector<ScenarioSpec> specs;
    if (suite_name == "pattern") {
        specs.push_back(build_corridor(1, "T1"));
        specs.push_back(build_corridor(1, "T2"));
        specs.push_back(build_corridor(1, "T3"));
        specs.push_back(build_corridor(2, "T4"));
        specs.push_back(build_corridor(2, "T5"));
        specs.push_back(build_corridor(2, "T6"));
        specs.push_back(build_corridor(3, "T7"));
        specs.push_back(build_corridor(3, "T8"));
    } else if (suite_name == "category") {
        const ScenarioSpec house1 = build_house(1);
        const ScenarioSpec house2 = build_house(2);
        const ScenarioSpec house3 = build_house(3);
        specs.push_back(with_goal(house1, GoalCommand::room(RoomCategory::kitchen), "house1_kitchen"));
        specs.push_back(with_goal(house1, GoalCommand::room(RoomCategory::living_room), "house1_living_room"));
        specs.push_back(with_goal(house1, GoalCommand::room(RoomCategory::home_gym), "house1_home_gym"));
        specs.push_back(with_goal(house1, GoalCommand::room(RoomCategory::bedroom), "house1_bedroom"));
        specs.push_back(with_goal(house2, GoalCommand::room(RoomCategory::kitchen), "house2_kitchen"));
        specs.push_back(with_goal(house2, GoalCommand::room(RoomCategory::living_room), "house2_living_room"));
        specs.push_back(with_goal(house3, GoalCommand::room(RoomCategory::kitchen), "house3_kitchen"));
        specs.push_back(with_goal(house3, GoalCommand::room(RoomCategory::living_room), "house3_living_room"));
    } else {
        throw InvalidParameterError("unknown suite '" + suite_name + "' (expected pattern|category)");
    }
    return specs;
}

namespace {

std::string pretty_detail(const ScenarioSpec& spec) {
    if (spec.goal.kind == GoalCommand::Kind::room_number) {
        // initial-point tag, e.g. corridor1_t2 -> T2
        const auto pos = spec.name.rfind("_t");
        return pos == std::string::npos ? spec.name : "T" + spec.name.substr(pos + 2);
    }
    std::string label = to_string(spec.goal.category);
    bool upper = true;
    for (auto& c : label) {
        if (c == '_') {
            c = ' ';
            upper = true;
        } else if (upper) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            upper = false;
        }
    }
    return label;
}

std::string pretty_world(const std::string& scenario_id) {
    if (scenario_id.rfind("corridor", 0) == 0)
        return "Corridor " + scenario_id.substr(8, 1);
    if (scenario_id.rfind("house", 0) == 0)
        return "House " + scenario_id.substr(5, 1);
    return scenario_id;
}

} // namespace

SuiteReport run_suite(const std::string& suite_name, const BackendConfig& backend) {
    SuiteReport report;
    report.suite_name = suite_name;
    const auto specs = suite_scenarios(suite_name);
    int successes = 0;
    int test_number = 1;
    for (const auto& spec : specs) {
        SuiteRow row;
        row.test_number = test_number++;
        row.world_label = pretty_world(spec.name);
        row.detail_label = pretty_detail(spec);
        row.result = run_trial(spec, backend);
        if (row.result.succeeded()) ++successes;
        report.rows.push_back(std::move(row));
    }
    report.success_rate = SuiteReport::rate_percent(successes, static_cast<int>(specs.size()));
    return report;
}

namespace {

ObjectList synthetic_list(int tick, const std::vector<std::pair<std::string, Point>>& items) {
    ObjectList list;
    list.tick = tick;
    for (const auto& [name, pos] : items) {
        list.names.push_back(name);
        list.positions[name] = pos;
    }
    std::sort(list.names.begin(), list.names.end());
    return list;
}

AblationScenario make_pattern_scenario() {
    AblationScenario s;
    s.id = "scenario1";
    s.goal = GoalCommand::number(202);
    s.mode = ReasoningMode::pattern;
    s.timesteps = {
        synthetic_list(1, {{"room_205", {9.0, 0.5}}, {"room_206", {11.0, 0.5}}, {"room_207", {13.0, 0.5}}}),
        synthetic_list(2, {{"room_203", {5.0, 0.5}}, {"room_204", {7.0, 0.5}}, {"room_205", {9.0, 0.5}}}),
        synthetic_list(3, {{"room_202", {3.0, 0.5}}, {"room_203", {5.0, 0.5}}, {"room_204", {7.0, 0.5}}}),
    };
    s.structured = build_reasoning_prompt(s.goal, s.mode);
    s.unstructured = build_unstructured_prompt(s.goal);
    std::optional<std::string> incumbent;
    for (const auto& list : s.timesteps) {
        const auto verdict = oracle_pattern(list, s.goal.room_number, incumbent);
        incumbent = verdict.desired_object;
        s.expected_sequence.push_back(verdict.desired_object.value_or("None"));
    }
    return s;
}

AblationScenario make_categorical_scenario() {
    AblationScenario s;
    s.id = "scenario2";
    s.goal = GoalCommand::room(RoomCategory::kitchen);
    s.mode = ReasoningMode::categorical;
    s.timesteps = {
        synthetic_list(1, {{"refrigerator", {2.0, 3.0}}, {"sofa", {6.0, 2.0}}, {"television", {6.5, 3.0}}}),
        synthetic_list(2, {{"chair", {4.0, 2.0}}, {"refrigerator", {2.0, 3.0}}, {"sink", {1.5, 4.0}}, {"table", {4.5, 2.5}}}),
    };
    s.structured = build_reasoning_prompt(s.goal, s.mode);
    s.unstructured = build_unstructured_prompt(s.goal);
    for (const auto& list : s.timesteps) {
        const auto verdict = oracle_categorical(list, s.goal.category, default_category_map());
        s.expected_sequence.push_back(verdict.desired_object.value_or("None"));
    }
    return s;
}

} // namespace

AblationFixtures ablation_fixtures() {
    return {make_pattern_scenario(), make_categorical_scenario()};
}

void write_ablation_fixtures(const AblationFixtures& fixtures, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto dump = [&](const std::string& file, const std::string& text) {
        std::ofstream out(fs::path(out_dir) / file, std::ios::binary);
        if (!out) throw Error("cannot write " + file + " under " + out_dir);
        out << text;
    };
    json expected;
    for (const AblationScenario* s : {&fixtures.pattern, &fixtures.categorical}) {
        dump(s->id + "_structured.txt", s->structured.rendered);
        dump(s->id + "_unstructured.txt", s->unstructured);
        std::ostringstream lists;
        for (const auto& list : s->timesteps)
            lists << format_list_update(list).text << "\n";
        dump(s->id + "_lists.txt", lists.str());
        expected[s->id] = s->expected_sequence;
    }
    dump("expected_verdicts.json", expected.dump(2) + "\n");
}

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "table") return ReportFormat::table;
    if (s == "jsonl") return ReportFormat::jsonl;
    if (s == "svg-traj") return ReportFormat::svg_traj;
    throw InvalidParameterError("unknown report format '" + s + "' (expected table|jsonl|svg-traj)");
}

namespace {

std::string render_table(const SuiteReport& report) {
    const bool pattern = report.suite_name == "pattern";
    const std::string detail_header = pattern ? "Initial Point" : "Goal";
    std::ostringstream out;
    char line[128];
    std::snprintf(line, sizeof line, "%4s  %-10s  %-13s  %-4s  %s\n", "Test", "World",
                  detail_header.c_str(), "Task", "Success Rate(%)");
    out << line;
    out << std::string(4 + 2 + 10 + 2 + 13 + 2 + 4 + 2 + 15, '-') << "\n";
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        const bool last = i + 1 == report.rows.size();
        char rate[16] = "";
        if (last) std::snprintf(rate, sizeof rate, "%.1f", report.success_rate);
        std::snprintf(line, sizeof line, "%4d  %-10s  %-13s  %-4s  %s\n", row.test_number,
                      row.world_label.c_str(), row.detail_label.c_str(),
                      row.result.succeeded() ? "✓" : "✗", rate);
        out << line;
    }
    return out.str();
}

std::string render_jsonl(const SuiteReport& report) {
    std::ostringstream out;
    for (const auto& row : report.rows) {
        json j;
        j["test"] = row.test_number;
        j["world"] = row.world_label;
        j["detail"] = row.detail_label;
        j["scenario"] = row.result.scenario_id;
        j["status"] = row.result.status_string();
        j["ticks"] = row.result.ticks_used;
        j["suite"] = report.suite_name;
        j["success_rate"] = report.success_rate;
        out << j.dump() << "\n";
    }
    return out.str();
}

} // namespace

std::string render_trajectory_svg(const ScenarioSpec& scenario, const TrialResult& result) {
    const double w = scenario.world.width;
    const double h = scenario.world.height;
    const double scale = 60.0;
    auto X = [&](double x) { return x * scale; };
    auto Y = [&](double y) { return (h - y) * scale; }; // SVG y grows downward

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(w) << "\" height=\""
        << Y(0) << "\" viewBox=\"0 0 " << X(w) << " " << Y(0) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& wall : scenario.world.walls)
        out << "<line x1=\"" << X(wall.a.x) << "\" y1=\"" << Y(wall.a.y) << "\" x2=\""
            << X(wall.b.x) << "\" y2=\"" << Y(wall.b.y)
            << "\" stroke=\"black\" stroke-width=\"4\"/>\n";
    for (const auto& obj : scenario.world.objects) {
        out << "<circle cx=\"" << X(obj.position.x) << "\" cy=\"" << Y(obj.position.y)
            << "\" r=\"5\" fill=\"steelblue\"/>\n";
        out << "<text x=\"" << X(obj.position.x) + 7 << "\" y=\"" << Y(obj.position.y) - 5
            << "\" font-size=\"11\">" << obj.name << "</text>\n";
    }
    if (!result.trajectory.empty()) {
        out << "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"2\" points=\"";
        for (const auto& p : result.trajectory)
            out << X(p.x) << "," << Y(p.y) << " ";
        out << "\"/>\n";
    }
    // start marker: circle; goal marker: star
    out << "<circle cx=\"" << X(scenario.start.x) << "\" cy=\"" << Y(scenario.start.y)
        << "\" r=\"8\" fill=\"none\" stroke=\"green\" stroke-width=\"3\"/>\n";
    std::optional<Point> goal;
    if (scenario.goal.kind == GoalCommand::Kind::room_number) {
        for (const auto& obj : scenario.world.objects)
            if (obj.kind.is_plate() && obj.kind.plate_number == scenario.goal.room_number)
                goal = obj.position;
    } else {
        for (const auto& region : scenario.world.regions)
            if (region.category == scenario.goal.category) {
                Point c{0.0, 0.0};
                for (const auto& v : region.polygon) {
                    c.x += v.x;
                    c.y += v.y;
                }
                c.x /= static_cast<double>(region.polygon.size());
                c.y /= static_cast<double>(region.polygon.size());
                goal = c;
                break;
            }
    }
    if (goal) {
        const double cx = X(goal->x), cy = Y(goal->y), r = 10.0;
        out << "<path class=\"goal-star\" fill=\"gold\" stroke=\"black\" d=\"";
        for (int k = 0; k < 10; ++k) {
            const double ang = -std::numbers::pi / 2 + k * std::numbers::pi / 5;
            const double rad = (k % 2 == 0) ? r : 0.45 * r;
            out << (k == 0 ? "M" : "L") << cx + rad * std::cos(ang) << " "
                << cy + rad * std::sin(ang) << " ";
        }
        out << "Z\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_report(const SuiteReport& report, ReportFormat format,
                          const std::string& out_dir) {
    switch (format) {
        case ReportFormat::table:
            return render_table(report);
        case ReportFormat::jsonl:
            return render_jsonl(report);
        case ReportFormat::svg_traj: {
            if (out_dir.empty())
                throw InvalidParameterError("svg-traj report needs an output directory");
            namespace fs = std::filesystem;
            fs::create_directories(out_dir);
            const auto specs = suite_scenarios(report.suite_name);
            std::ostringstream summary;
            for (const auto& row : report.rows) {
                const ScenarioSpec* spec = nullptr;
                for (const auto& s : specs)
                    if (s.name == row.result.scenario_id) spec = &s;
                if (!spec) continue;
                const auto path = fs::path(out_dir) / (row.result.scenario_id + ".svg");
                std::ofstream out(path, std::ios::binary);
                out << render_trajectory_svg(*spec, row.result);
                summary << path.string() << "\n";
            }
            return summary.str();
        }
    }
    throw InvalidParameterError("unknown report format");
}

} // namespace dynacon
