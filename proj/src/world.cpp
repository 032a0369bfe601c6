#include "dynacon/world.hpp"

#include <cctype>
#include <cmath>
#include <set>

#include "dynacon/errors.hpp"

namespace dynacon {

std::string to_string(RoomCategory c) {
    switch (c) {
        case RoomCategory::kitchen: return "kitchen";
        case RoomCategory::living_room: return "living_room";
        case RoomCategory::bedroom: return "bedroom";
        case RoomCategory::home_gym: return "home_gym";
        case RoomCategory::corridor: return "corridor";
        case RoomCategory::other: return "other";
    }
    return "other";
}

RoomCategory room_category_from_string(const std::string& s) {
    if (s == "kitchen") return RoomCategory::kitchen;
    if (s == "living_room") return RoomCategory::living_room;
    if (s == "bedroom") return RoomCategory::bedroom;
    if (s == "home_gym") return RoomCategory::home_gym;
    if (s == "corridor") return RoomCategory::corridor;
    if (s == "other") return RoomCategory::other;
    throw ScenarioError("unknown room category: " + s);
}

OccupancyGrid rasterize(const std::vector<Segment>& walls, double width, double height,
                        double resolution, double inflation) {
    if (resolution <= 0.0) throw InvalidParameterError("rasterize: resolution must be > 0");
    if (width <= 0.0 || height <= 0.0) throw InvalidParameterError("rasterize: bounds must be positive");
    for (const auto& w : walls) {
        auto inside = [&](const Point& p) {
            return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
        };
        if (!inside(w.a) || !inside(w.b))
            throw InvalidParameterError("rasterize: wall segment outside bounds");
    }

    OccupancyGrid g;
    g.resolution = resolution;
    g.cols = static_cast<int>(std::ceil(width / resolution - 1e-9));
    g.rows = static_cast<int>(std::ceil(height / resolution - 1e-9));
    g.occupied.assign(static_cast<size_t>(g.cols) * g.rows, 0);

    for (const auto& w : walls) {
        // only sweep cells near the segment's bounding box
        const double x0 = std::min(w.a.x, w.b.x) - inflation;
        const double x1 = std::max(w.a.x, w.b.x) + inflation;
        const double y0 = std::min(w.a.y, w.b.y) - inflation;
        const double y1 = std::max(w.a.y, w.b.y) + inflation;
        const int cx0 = std::max(0, g.cell_x(x0));
        const int cx1 = std::min(g.cols - 1, g.cell_x(x1));
        const int cy0 = std::max(0, g.cell_y(y0));
        const int cy1 = std::min(g.rows - 1, g.cell_y(y1));
        for (int cy = cy0; cy <= cy1; ++cy) {
            for (int cx = cx0; cx <= cx1; ++cx) {
                if (g.is_occupied(cx, cy)) continue;
                if (point_segment_distance(g.center(cx, cy), w) <= inflation)
                    g.set_occupied(cx, cy, true);
            }
        }
    }
    return g;
}

const WorldObject* OccupancyWorld::find_object(const std::string& name) const {
    for (const auto& o : objects)
        if (o.name == name) return &o;
    return nullptr;
}

void OccupancyWorld::validate() const {
    if (resolution <= 0.0) throw ScenarioError("world: resolution must be > 0");
    if (width <= 0.0 || height <= 0.0) throw ScenarioError("world: bounds must be positive");
    if (grid.cols == 0 || grid.rows == 0) throw ScenarioError("world: grid not built");

    std::set<std::string> names;
    for (const auto& o : objects) {
        if (!names.insert(o.name).second)
            throw ScenarioError("world: duplicate object name '" + o.name + "'");
        if (o.kind.is_plate() && o.kind.plate_number <= 0)
            throw ScenarioError("world: room plate '" + o.name + "' must have a positive number");
        if (!std::isfinite(o.position.x) || !std::isfinite(o.position.y))
            throw ScenarioError("world: object '" + o.name + "' has a non-finite position");
        if (!grid.point_free(o.position))
            throw ScenarioError("world: object '" + o.name + "' lies in an occupied cell");
    }
    for (const auto& r : regions) {
        if (r.polygon.size() < 3)
            throw ScenarioError("world: region '" + r.name + "' needs >= 3 vertices");
        if (!polygon_is_simple(r.polygon))
            throw ScenarioError("world: region '" + r.name + "' polygon self-intersects");
        for (const auto& v : r.polygon)
            if (v.x < 0.0 || v.x > width || v.y < 0.0 || v.y > height)
                throw ScenarioError("world: region '" + r.name + "' extends outside bounds");
    }
    for (size_t i = 0; i < regions.size(); ++i)
        for (size_t j = i + 1; j < regions.size(); ++j)
            if (polygons_overlap(regions[i].polygon, regions[j].polygon))
                throw ScenarioError("world: regions '" + regions[i].name + "' and '" +
                                    regions[j].name + "' overlap");
}

GoalCommand GoalCommand::number(int n, std::string raw) {
    GoalCommand g;
    g.kind = Kind::room_number;
    g.room_number = n;
    g.raw_text = raw.empty() ? "Go to room " + std::to_string(n) + "." : std::move(raw);
    return g;
}

GoalCommand GoalCommand::room(RoomCategory c, std::string raw) {
    GoalCommand g;
    g.kind = Kind::room_category;
    g.category = c;
    if (raw.empty()) {
        std::string pretty = to_string(c);
        for (auto& ch : pretty)
            if (ch == '_') ch = ' ';
        g.raw_text = "Go to the " + pretty + ".";
    } else {
        g.raw_text = std::move(raw);
    }
    return g;
}

void ScenarioSpec::validate() const {
    world.validate();
    if (max_ticks <= 0) throw ScenarioError("scenario: max_ticks must be > 0");
    if (sensor.range <= 0.0) throw ScenarioError("scenario: sensor range must be > 0");
    if (sensor.period_ticks < 1) throw ScenarioError("scenario: sensor period must be >= 1");
    if (!std::isfinite(start.x) || !std::isfinite(start.y))
        throw ScenarioError("scenario: start pose must be finite");
    if (!world.grid.point_free(start.position()))
        throw ScenarioError("scenario: start pose lies in occupied space");
    if (goal.kind == GoalCommand::Kind::room_number && goal.room_number <= 0)
        throw ScenarioError("scenario: goal room number must be positive");
}

std::optional<int> plate_number_from_name(const std::string& name) {
    constexpr std::string_view prefix = "room_";
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    int value = 0;
    for (size_t i = prefix.size(); i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        value = value * 10 + (name[i] - '0');
    }
    return value;
}

std::string name_stem(const std::string& name) {
    const auto pos = name.rfind('_');
    if (pos == std::string::npos || pos + 1 >= name.size()) return name;
    for (size_t i = pos + 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return name;
    return name.substr(0, pos);
}

} // namespace dynacon
