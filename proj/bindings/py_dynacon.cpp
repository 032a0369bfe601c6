#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynacon/builtin_worlds.hpp"
#include "dynacon/errors.hpp"
#include "dynacon/harness.hpp"
#include "dynacon/navctl.hpp"
#include "dynacon/perception.hpp"
#include "dynacon/planning.hpp"
#include "dynacon/prompting.hpp"
#include "dynacon/reasoning.hpp"
#include "dynacon/scenario_io.hpp"
#include "dynacon/trace.hpp"
#include "dynacon/world.hpp"

namespace py = pybind11;
using namespace dynacon;

namespace {

ObjectList make_object_list(const std::vector<std::pair<std::string, std::pair<double, double>>>& items,
                            int tick) {
    ObjectList list;
    list.tick = tick;
    for (const auto& [name, pos] : items) {
        list.names.push_back(name);
        list.positions[name] = {pos.first, pos.second};
    }
    std::sort(list.names.begin(), list.names.end());
    return list;
}

BackendConfig backend_of(const std::string& kind) {
    BackendConfig config;
    if (kind == "llm")
        config.kind = BackendKind::llm;
    else if (kind != "oracle")
        throw InvalidParameterError("backend must be 'oracle' or 'llm'");
    return config;
}

} // namespace

PYBIND11_MODULE(_dynacon, m) {
    m.doc() = "Context-aware map-free navigation simulator";

    py::register_exception<Error>(m, "DynaconError");

    py::class_<Pose>(m, "Pose")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("theta") = 0.0)
        .def_readonly("x", &Pose::x)
        .def_readonly("y", &Pose::y)
        .def_readonly("theta", &Pose::theta)
        .def("__repr__", [](const Pose& p) {
            return "Pose(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
                   std::to_string(p.theta) + ")";
        });

    py::class_<GoalCommand>(m, "GoalCommand")
        .def_static("number", [](int n) { return GoalCommand::number(n); })
        .def_static("room", [](const std::string& c) {
            return GoalCommand::room(room_category_from_string(c));
        })
        .def_readonly("raw_text", &GoalCommand::raw_text);

    py::class_<ObjectList>(m, "ObjectList")
        .def_readonly("tick", &ObjectList::tick)
        .def_readonly("names", &ObjectList::names)
        .def("position", [](const ObjectList& l, const std::string& name) {
            const auto it = l.positions.find(name);
            if (it == l.positions.end()) throw py::key_error(name);
            return std::make_pair(it->second.x, it->second.y);
        });

    py::class_<ScenarioSpec>(m, "ScenarioSpec")
        .def_readonly("name", &ScenarioSpec::name)
        .def_readonly("start", &ScenarioSpec::start)
        .def_readonly("max_ticks", &ScenarioSpec::max_ticks)
        .def_property_readonly("goal_text",
                               [](const ScenarioSpec& s) { return s.goal.raw_text; })
        .def_property_readonly("object_names", [](const ScenarioSpec& s) {
            std::vector<std::string> names;
            for (const auto& o : s.world.objects) names.push_back(o.name);
            return names;
        });

    py::class_<ReasoningVerdict>(m, "ReasoningVerdict")
        .def_property_readonly("desired_object",
                               [](const ReasoningVerdict& v) { return v.desired_object; })
        .def_readonly("rationale", &ReasoningVerdict::rationale)
        .def_readonly("tick", &ReasoningVerdict::tick);

    py::class_<TrialResult>(m, "TrialResult")
        .def_readonly("scenario_id", &TrialResult::scenario_id)
        .def_property_readonly("succeeded", &TrialResult::succeeded)
        .def_property_readonly("status", &TrialResult::status_string)
        .def_readonly("ticks_used", &TrialResult::ticks_used)
        .def_property_readonly("trajectory", [](const TrialResult& r) {
            std::vector<std::pair<double, double>> xy;
            for (const auto& p : r.trajectory) xy.emplace_back(p.x, p.y);
            return xy;
        })
        .def_property_readonly("verdict_sequence", [](const TrialResult& r) {
            std::vector<std::optional<std::string>> seq;
            for (const auto& v : r.verdict_history) seq.push_back(v.desired_object);
            return seq;
        });

    py::class_<SuiteReport>(m, "SuiteReport")
        .def_readonly("suite_name", &SuiteReport::suite_name)
        .def_readonly("success_rate", &SuiteReport::success_rate)
        .def_property_readonly("statuses", [](const SuiteReport& r) {
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& row : r.rows)
                rows.emplace_back(row.result.scenario_id, row.result.status_string());
            return rows;
        })
        .def("render", [](const SuiteReport& r, const std::string& format) {
            return render_report(r, report_format_from_string(format));
        }, py::arg("format") = "table");

    m.def("build_corridor", &build_corridor, py::arg("variant"), py::arg("start_tag"));
    m.def("build_house", &build_house, py::arg("variant"));
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("scenario_to_json", &scenario_to_json, py::arg("spec"));
    m.def("save_scenario", &save_scenario, py::arg("spec"), py::arg("path"));

    m.def("sense",
          [](const ScenarioSpec& spec, const Pose& pose, int tick) {
              return sense(spec.world, pose, spec.sensor, tick);
          },
          py::arg("spec"), py::arg("pose"), py::arg("tick") = 0);
    m.def("list_changed", &list_changed, py::arg("prev"), py::arg("curr"));

    m.def("object_list", &make_object_list, py::arg("items"), py::arg("tick") = 0,
          "Builds an ObjectList from [(name, (x, y)), ...]");

    m.def("oracle_pattern",
          [](const ObjectList& list, int goal_number, const std::optional<std::string>& incumbent) {
              return oracle_pattern(list, goal_number, incumbent);
          },
          py::arg("list"), py::arg("goal_number"), py::arg("incumbent") = std::nullopt);
    m.def("oracle_categorical",
          [](const ObjectList& list, const std::string& goal) {
              return oracle_categorical(list, room_category_from_string(goal),
                                        default_category_map());
          },
          py::arg("list"), py::arg("goal"));
    m.def("parse_verdict", &parse_verdict, py::arg("raw"), py::arg("list"));

    m.def("build_reasoning_prompt",
          [](const GoalCommand& goal, const std::string& mode) {
              const auto bundle = build_reasoning_prompt(
                  goal, mode == "pattern" ? ReasoningMode::pattern : ReasoningMode::categorical);
              return bundle.rendered;
          },
          py::arg("goal"), py::arg("mode"));
    m.def("build_unstructured_prompt", &build_unstructured_prompt, py::arg("goal"));
    m.def("format_list_update",
          [](const ObjectList& list) { return format_list_update(list).text; }, py::arg("list"));

    m.def("step_kinematics",
          [](const Pose& pose, double v, double w, double dt) {
              return step_kinematics(pose, {v, w, false}, dt);
          },
          py::arg("pose"), py::arg("v"), py::arg("w"), py::arg("dt"));

    m.def("shortest_path_cost",
          [](const ScenarioSpec& spec, std::pair<double, double> from, std::pair<double, double> to) {
              const auto& grid = spec.world.grid;
              const Cell goal{grid.cell_x(to.first), grid.cell_y(to.second)};
              const auto field = plan_potential(grid, goal);
              const Cell start{grid.cell_x(from.first), grid.cell_y(from.second)};
              return field.at(start);
          },
          py::arg("spec"), py::arg("from_xy"), py::arg("to_xy"));

    m.def("run_trial",
          [](const ScenarioSpec& spec, const std::string& backend, unsigned seed,
             const std::string& trace_path) {
              return run_trial(spec, backend_of(backend), seed, trace_path);
          },
          py::arg("spec"), py::arg("backend") = "oracle", py::arg("seed") = 0,
          py::arg("trace_path") = "");
    m.def("run_suite",
          [](const std::string& name, const std::string& backend) {
              return run_suite(name, backend_of(backend));
          },
          py::arg("name"), py::arg("backend") = "oracle");

    m.def("ablation_expected_sequences", []() {
        const auto fixtures = ablation_fixtures();
        return std::map<std::string, std::vector<std::string>>{
            {fixtures.pattern.id, fixtures.pattern.expected_sequence},
            {fixtures.categorical.id, fixtures.categorical.expected_sequence},
        };
    });

    m.attr("__version__") = "0.1.0";
}
