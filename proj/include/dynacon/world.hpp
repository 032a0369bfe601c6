#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynacon/geometry.hpp"

namespace dynacon {

inline constexpr double kDefaultResolution = 0.25; // meters per cell
inline constexpr double kRobotRadius = 0.3;        // disc model, inflates walls

enum class RoomCategory { kitchen, living_room, bedroom, home_gym, corridor, other };

std::string to_string(RoomCategory c);
RoomCategory room_category_from_string(const std::string& s);

// Either a numbered door plate or a piece of furniture with a room category.
struct ObjectKind {
    enum class Tag { room_plate, furniture };
    Tag tag = Tag::furniture;
    int plate_number = 0; // room_plate only
    RoomCategory category = RoomCategory::other; // furniture only

    static ObjectKind plate(int number) { return {Tag::room_plate, number, RoomCategory::other}; }
    static ObjectKind furniture(RoomCategory c) { return {Tag::furniture, 0, c}; }
    bool is_plate() const { return tag == Tag::room_plate; }
};

struct WorldObject {
    std::string id;
    std::string name; // unique within a world, e.g. "room_205", "refrigerator"
    Point position;
    ObjectKind kind;
};

struct RoomRegion {
    std::string name;
    RoomCategory category = RoomCategory::other;
    std::vector<Point> polygon;
};

struct OccupancyGrid {
    int cols = 0;
    int rows = 0;
    double resolution = kDefaultResolution;
    std::vector<uint8_t> occupied; // row-major, rows*cols

    bool in_bounds(int cx, int cy) const { return cx >= 0 && cx < cols && cy >= 0 && cy < rows; }
    bool is_occupied(int cx, int cy) const { return occupied[static_cast<size_t>(cy) * cols + cx] != 0; }
    void set_occupied(int cx, int cy, bool v) { occupied[static_cast<size_t>(cy) * cols + cx] = v ? 1 : 0; }

    // Cell containing a world point; callers must clamp or bounds-check.
    int cell_x(double x) const { return static_cast<int>(std::floor(x / resolution)); }
    int cell_y(double y) const { return static_cast<int>(std::floor(y / resolution)); }
    Point center(int cx, int cy) const {
        return {(cx + 0.5) * resolution, (cy + 0.5) * resolution};
    }
    bool point_free(const Point& p) const {
        const int cx = cell_x(p.x), cy = cell_y(p.y);
        return in_bounds(cx, cy) && !is_occupied(cx, cy);
    }
};

// Marks occupied every cell whose center lies within `inflation` of a wall segment.
OccupancyGrid rasterize(const std::vector<Segment>& walls, double width, double height,
                        double resolution, double inflation = kRobotRadius);

struct OccupancyWorld {
    double width = 0.0;  // meters
    double height = 0.0; // meters
    double resolution = kDefaultResolution;
    std::vector<Segment> walls;
    std::vector<WorldObject> objects;
    std::vector<RoomRegion> regions;
    OccupancyGrid grid; // derived from walls on construction/load

    void rebuild_grid() { grid = rasterize(walls, width, height, resolution); }
    const WorldObject* find_object(const std::string& name) const;
    // Validates all type invariants; throws ScenarioError naming the violation.
    void validate() const;
};

struct SensorParams {
    double range = 5.0;     // meters
    bool occlusion = true;  // ray-cast against occupied cells
    int period_ticks = 5;
};

struct GoalCommand {
    enum class Kind { room_number, room_category };
    Kind kind = Kind::room_number;
    int room_number = 0;
    RoomCategory category = RoomCategory::other;
    std::string raw_text;

    static GoalCommand number(int n, std::string raw = "");
    static GoalCommand room(RoomCategory c, std::string raw = "");
};

struct ScenarioSpec {
    std::string name;
    OccupancyWorld world;
    Pose start;
    GoalCommand goal;
    int max_ticks = 3000;
    SensorParams sensor;
    // optional parameter overrides, parsed by the planner/executive modules
    std::string planner_json;   // raw JSON object text, empty when absent
    std::string executive_json; // raw JSON object text, empty when absent

    void validate() const;
};

// If plate-style ("room_<digits>"), returns the number.
std::optional<int> plate_number_from_name(const std::string& name);

// Furniture stem: name with a trailing "_<digits>" disambiguator stripped.
std::string name_stem(const std::string& name);

} // namespace dynacon
