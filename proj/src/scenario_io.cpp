#include "dynacon/scenario_io.hpp"

#include <fstream>

#include <json.hpp>

#include "dynacon/errors.hpp"

namespace dynacon {

using nlohmann::json;

namespace {

json point_to_json(const Point& p) { return json::array({p.x, p.y}); }

Point point_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw ScenarioError(where + ": expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json world_to_json(const OccupancyWorld& w) {
    json jw;
    jw["bounds"] = {{"width", w.width}, {"height", w.height}};
    jw["resolution"] = w.resolution;
    json walls = json::array();
    for (const auto& s : w.walls)
        walls.push_back(json::array({s.a.x, s.a.y, s.b.x, s.b.y}));
    jw["walls"] = walls;
    json objects = json::array();
    for (const auto& o : w.objects) {
        json jo;
        jo["id"] = o.id;
        jo["name"] = o.name;
        jo["x"] = o.position.x;
        jo["y"] = o.position.y;
        if (o.kind.is_plate()) {
            jo["kind"] = "room_plate";
            jo["number"] = o.kind.plate_number;
        } else {
            jo["kind"] = "furniture";
            jo["category"] = to_string(o.kind.category);
        }
        objects.push_back(jo);
    }
    jw["objects"] = objects;
    json regions = json::array();
    for (const auto& r : w.regions) {
        json jr;
        jr["name"] = r.name;
        jr["category"] = to_string(r.category);
        json poly = json::array();
        for (const auto& v : r.polygon) poly.push_back(point_to_json(v));
        jr["polygon"] = poly;
        regions.push_back(jr);
    }
    jw["regions"] = regions;
    return jw;
}

OccupancyWorld world_from_json(const json& jw) {
    OccupancyWorld w;
    const auto& bounds = jw.at("bounds");
    w.width = bounds.at("width").get<double>();
    w.height = bounds.at("height").get<double>();
    w.resolution = jw.at("resolution").get<double>();
    for (const auto& s : jw.at("walls")) {
        if (!s.is_array() || s.size() != 4)
            throw ScenarioError("world.walls: expected [x1, y1, x2, y2]");
        w.walls.push_back({{s[0].get<double>(), s[1].get<double>()},
                           {s[2].get<double>(), s[3].get<double>()}});
    }
    for (const auto& jo : jw.at("objects")) {
        WorldObject o;
        o.id = jo.at("id").get<std::string>();
        o.name = jo.at("name").get<std::string>();
        o.position = {jo.at("x").get<double>(), jo.at("y").get<double>()};
        const auto kind = jo.at("kind").get<std::string>();
        if (kind == "room_plate") {
            o.kind = ObjectKind::plate(jo.at("number").get<int>());
        } else if (kind == "furniture") {
            o.kind = ObjectKind::furniture(room_category_from_string(jo.at("category").get<std::string>()));
        } else {
            throw ScenarioError("object '" + o.name + "': unknown kind '" + kind + "'");
        }
        w.objects.push_back(std::move(o));
    }
    if (jw.contains("regions")) {
        for (const auto& jr : jw.at("regions")) {
            RoomRegion r;
            r.name = jr.at("name").get<std::string>();
            r.category = room_category_from_string(jr.at("category").get<std::string>());
            for (const auto& v : jr.at("polygon"))
                r.polygon.push_back(point_from_json(v, "region '" + r.name + "' polygon"));
            w.regions.push_back(std::move(r));
        }
    }
    w.rebuild_grid();
    return w;
}

} // namespace

std::string scenario_to_json(const ScenarioSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["world"] = world_to_json(spec.world);
    j["start"] = {{"x", spec.start.x}, {"y", spec.start.y}, {"theta", spec.start.theta}};
    json goal;
    if (spec.goal.kind == GoalCommand::Kind::room_number)
        goal["room_number"] = spec.goal.room_number;
    else
        goal["room_category"] = to_string(spec.goal.category);
    goal["raw_text"] = spec.goal.raw_text;
    j["goal"] = goal;
    j["max_ticks"] = spec.max_ticks;
    j["sensor"] = {{"range", spec.sensor.range},
                   {"occlusion", spec.sensor.occlusion},
                   {"period_ticks", spec.sensor.period_ticks}};
    if (!spec.planner_json.empty()) j["planner"] = json::parse(spec.planner_json);
    if (!spec.executive_json.empty()) j["executive"] = json::parse(spec.executive_json);
    return j.dump(2) + "\n";
}

void save_scenario(const ScenarioSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ScenarioError("cannot open for writing: " + path);
    out << scenario_to_json(spec);
}

ScenarioSpec parse_scenario_json(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(origin + ": JSON parse error at byte " + std::to_string(e.byte) +
                            ": " + e.what());
    }
    ScenarioSpec spec;
    try {
        spec.name = j.value("name", "");
        spec.world = world_from_json(j.at("world"));
        const auto& js = j.at("start");
        spec.start = Pose(js.at("x").get<double>(), js.at("y").get<double>(),
                          js.value("theta", 0.0));
        const auto& jg = j.at("goal");
        if (jg.contains("room_number") && jg.contains("room_category"))
            throw ScenarioError("goal: exactly one of room_number/room_category allowed");
        if (jg.contains("room_number"))
            spec.goal = GoalCommand::number(jg.at("room_number").get<int>(), jg.value("raw_text", ""));
        else if (jg.contains("room_category"))
            spec.goal = GoalCommand::room(room_category_from_string(jg.at("room_category").get<std::string>()),
                                          jg.value("raw_text", ""));
        else
            throw ScenarioError("goal: one of room_number/room_category required");
        spec.max_ticks = j.at("max_ticks").get<int>();
        const auto& jn = j.at("sensor");
        spec.sensor.range = jn.at("range").get<double>();
        spec.sensor.occlusion = jn.at("occlusion").get<bool>();
        spec.sensor.period_ticks = jn.at("period_ticks").get<int>();
        if (j.contains("planner")) spec.planner_json = j.at("planner").dump();
        if (j.contains("executive")) spec.executive_json = j.at("executive").dump();
    } catch (const json::exception& e) {
        throw ScenarioError(origin + ": " + e.what());
    }
    try {
        spec.validate();
    } catch (const ScenarioError& e) {
        throw ScenarioError(origin + ": " + e.what());
    }
    return spec;
}

ScenarioSpec load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioError("cannot open scenario file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_scenario_json(text, path);
}

} // namespace dynacon
