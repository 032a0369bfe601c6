#include "dynacon/builtin_worlds.hpp"

#include <cctype>
#include <cstdio>
#include <numbers>

#include "dynacon/errors.hpp"

namespace dynacon {

namespace {

constexpr double kPi = std::numbers::pi;

void add_plate(OccupancyWorld& w, int number, double x, double y) {
    WorldObject o;
    o.id = "door-" + std::to_string(number);
    o.name = "room_" + std::to_string(number);
    o.position = {x, y};
    o.kind = ObjectKind::plate(number);
    w.objects.push_back(std::move(o));
}

void add_furniture(OccupancyWorld& w, const std::string& name, RoomCategory c, double x, double y) {
    WorldObject o;
    o.id = "obj-" + name;
    o.name = name;
    o.position = {x, y};
    o.kind = ObjectKind::furniture(c);
    w.objects.push_back(std::move(o));
}

void add_rect_region(OccupancyWorld& w, const std::string& name, RoomCategory c,
                     double x0, double y0, double x1, double y1) {
    w.regions.push_back({name, c, {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}});
}

ScenarioSpec straight_corridor(int variant) {
    ScenarioSpec spec;
    OccupancyWorld& w = spec.world;
    w.width = 14.0;
    w.height = 4.0;
    w.resolution = kDefaultResolution;
    w.walls = {
        {{0.0, 0.0}, {14.0, 0.0}},
        {{14.0, 0.0}, {14.0, 4.0}},
        {{14.0, 4.0}, {0.0, 4.0}},
        {{0.0, 4.0}, {0.0, 0.0}},
    };
    const double door_x[5] = {2.0, 4.5, 7.0, 9.5, 12.0};
    if (variant == 1) {
        // 201..205 west-to-east on the +y wall, 210..206 on the -y wall
        for (int i = 0; i < 5; ++i) add_plate(w, 201 + i, door_x[i], 3.5);
        for (int i = 0; i < 5; ++i) add_plate(w, 210 - i, door_x[i], 0.5);
    } else {
        // counter-clockwise ring: 201..205 along -y, then 206..210 back along +y
        for (int i = 0; i < 5; ++i) add_plate(w, 201 + i, door_x[i], 0.5);
        for (int i = 0; i < 5; ++i) add_plate(w, 210 - i, door_x[i], 3.5);
    }
    w.rebuild_grid();
    return spec;
}

ScenarioSpec l_corridor() {
    ScenarioSpec spec;
    OccupancyWorld& w = spec.world;
    w.width = 14.0;
    w.height = 14.0;
    w.resolution = kDefaultResolution;
    // horizontal arm y in [0,4], vertical arm x in [10,14]
    w.walls = {
        {{0.0, 0.0}, {14.0, 0.0}},   // outer, bottom
        {{14.0, 0.0}, {14.0, 14.0}}, // outer, right
        {{10.0, 14.0}, {14.0, 14.0}},
        {{0.0, 0.0}, {0.0, 4.0}},
        {{0.0, 4.0}, {10.0, 4.0}},   // inner, top of the horizontal arm
        {{10.0, 4.0}, {10.0, 14.0}}, // inner, left of the vertical arm
    };
    for (int i = 0; i < 7; ++i) add_plate(w, 201 + i, 1.5 + 2.0 * i, 0.5);
    for (int i = 0; i < 6; ++i) add_plate(w, 208 + i, 13.5, 2.5 + 2.0 * i);
    w.rebuild_grid();
    return spec;
}

struct StartDef {
    int variant;
    Pose pose;
    int goal_number;
};

StartDef start_for_tag(const std::string& tag) {
    if (tag == "T1") return {1, Pose(0.8, 2.0, 0.0), 205};
    if (tag == "T2") return {1, Pose(7.0, 2.0, 0.0), 210};
    if (tag == "T3") return {1, Pose(13.2, 2.0, kPi), 201};
    if (tag == "T4") return {2, Pose(0.8, 2.0, 0.0), 206};
    if (tag == "T5") return {2, Pose(7.0, 2.0, 0.0), 201};
    if (tag == "T6") return {2, Pose(13.2, 2.0, kPi), 210};
    if (tag == "T7") return {3, Pose(0.8, 2.0, 0.0), 213};
    if (tag == "T8") return {3, Pose(12.0, 2.0, kPi), 201};
    throw InvalidParameterError("build_corridor: unknown start tag '" + tag + "'");
}

} // namespace

ScenarioSpec build_corridor(int variant, const std::string& start_tag) {
    if (variant < 1 || variant > 3)
        throw InvalidParameterError("build_corridor: variant must be 1..3");
    const StartDef def = start_for_tag(start_tag);
    if (def.variant != variant)
        throw InvalidParameterError("build_corridor: start tag " + start_tag +
                                    " belongs to corridor " + std::to_string(def.variant));
    ScenarioSpec spec = (variant == 3) ? l_corridor() : straight_corridor(variant);
    spec.start = def.pose;
    spec.goal = GoalCommand::number(def.goal_number);
    spec.max_ticks = 3000;
    char buf[32];
    std::snprintf(buf, sizeof buf, "corridor%d_%c%c", variant,
                  static_cast<char>(std::tolower(start_tag[0])), start_tag[1]);
    spec.name = buf;
    spec.validate();
    return spec;
}

ScenarioSpec build_house(int variant) {
    ScenarioSpec spec;
    OccupancyWorld& w = spec.world;
    w.resolution = kDefaultResolution;
    switch (variant) {
        case 1: {
            w.width = 12.0;
            w.height = 10.0;
            w.walls = {
                {{0.0, 0.0}, {12.0, 0.0}},
                {{12.0, 0.0}, {12.0, 10.0}},
                {{12.0, 10.0}, {0.0, 10.0}},
                {{0.0, 10.0}, {0.0, 0.0}},
                // hallway along y in [6,7]; entered at the east end
                {{0.0, 6.0}, {10.7, 6.0}},
                // back rooms behind the hallway; door gaps at x in (5,6) and (6.2,7.2)
                {{0.0, 7.0}, {5.0, 7.0}},
                {{6.0, 7.0}, {6.2, 7.0}},
                {{7.2, 7.0}, {12.0, 7.0}},
                {{6.0, 7.0}, {6.0, 10.0}},
            };
            add_furniture(w, "refrigerator", RoomCategory::kitchen, 3.2, 3.0);
            add_furniture(w, "sink", RoomCategory::kitchen, 2.4, 4.0);
            add_furniture(w, "cooking_bench", RoomCategory::kitchen, 2.6, 1.8);
            add_furniture(w, "chair", RoomCategory::other, 4.8, 2.2);
            add_furniture(w, "table", RoomCategory::other, 4.6, 3.4);
            add_furniture(w, "sofa", RoomCategory::living_room, 8.8, 2.0);
            add_furniture(w, "tv_cabinet", RoomCategory::living_room, 10.2, 3.0);
            add_furniture(w, "television", RoomCategory::living_room, 9.8, 3.0);
            add_furniture(w, "bed", RoomCategory::bedroom, 3.0, 8.5);
            add_furniture(w, "wardrobe", RoomCategory::bedroom, 1.2, 9.2);
            add_furniture(w, "treadmill", RoomCategory::home_gym, 9.0, 8.6);
            add_furniture(w, "dumbbell_rack", RoomCategory::home_gym, 10.8, 9.2);
            add_rect_region(w, "kitchen", RoomCategory::kitchen, 0.0, 0.0, 4.9, 6.0);
            add_rect_region(w, "living_room", RoomCategory::living_room, 7.2, 0.0, 12.0, 6.0);
            add_rect_region(w, "bedroom", RoomCategory::bedroom, 0.0, 7.0, 6.0, 10.0);
            add_rect_region(w, "home_gym", RoomCategory::home_gym, 6.0, 7.0, 12.0, 10.0);
            spec.start = Pose(6.0, 1.0, kPi / 2.0);
            break;
        }
        case 2: {
            // open plan, no interior partitions
            w.width = 10.0;
            w.height = 8.0;
            w.walls = {
                {{0.0, 0.0}, {10.0, 0.0}},
                {{10.0, 0.0}, {10.0, 8.0}},
                {{10.0, 8.0}, {0.0, 8.0}},
                {{0.0, 8.0}, {0.0, 0.0}},
            };
            add_furniture(w, "refrigerator", RoomCategory::kitchen, 1.5, 6.5);
            add_furniture(w, "sink", RoomCategory::kitchen, 2.5, 7.0);
            add_furniture(w, "sofa", RoomCategory::living_room, 7.5, 6.0);
            add_furniture(w, "television", RoomCategory::living_room, 8.5, 6.5);
            add_furniture(w, "table", RoomCategory::other, 5.0, 5.0);
            add_furniture(w, "chair", RoomCategory::other, 5.5, 5.5);
            add_furniture(w, "bed", RoomCategory::bedroom, 8.5, 2.0);
            add_rect_region(w, "kitchen", RoomCategory::kitchen, 0.0, 4.5, 3.5, 8.0);
            add_rect_region(w, "living_room", RoomCategory::living_room, 6.0, 4.5, 10.0, 8.0);
            add_rect_region(w, "bedroom", RoomCategory::bedroom, 6.0, 0.0, 10.0, 3.0);
            spec.start = Pose(5.0, 1.0, kPi / 2.0);
            break;
        }
        case 3: {
            w.width = 12.0;
            w.height = 10.0;
            w.walls = {
                {{0.0, 0.0}, {12.0, 0.0}},
                {{12.0, 0.0}, {12.0, 10.0}},
                {{12.0, 10.0}, {0.0, 10.0}},
                {{0.0, 10.0}, {0.0, 0.0}},
                // kitchen behind the north-west partition, door gap at x in (2.5,4.5)
                {{0.0, 6.0}, {2.5, 6.0}},
                {{4.5, 6.0}, {4.5, 10.0}},
                // living room in the north-east corner, entered from the east
                {{4.5, 6.0}, {10.6, 6.0}},
                {{8.0, 6.0}, {8.0, 10.0}},
            };
            add_furniture(w, "bed", RoomCategory::bedroom, 7.5, 3.0);
            add_furniture(w, "desk", RoomCategory::other, 4.5, 2.5);
            add_furniture(w, "shelf", RoomCategory::other, 3.8, 4.2);
            add_furniture(w, "wardrobe", RoomCategory::bedroom, 8.5, 4.5);
            add_furniture(w, "painting", RoomCategory::other, 6.0, 5.45);
            add_furniture(w, "refrigerator", RoomCategory::kitchen, 2.2, 6.8);
            add_furniture(w, "sink", RoomCategory::kitchen, 1.2, 9.2);
            add_furniture(w, "cooking_bench", RoomCategory::kitchen, 3.0, 9.3);
            add_furniture(w, "sofa", RoomCategory::living_room, 8.3, 9.6);
            add_furniture(w, "television", RoomCategory::living_room, 8.6, 9.7);
            add_rect_region(w, "kitchen", RoomCategory::kitchen, 0.0, 6.0, 4.5, 10.0);
            add_rect_region(w, "living_room", RoomCategory::living_room, 8.0, 6.0, 12.0, 10.0);
            add_rect_region(w, "bedroom", RoomCategory::bedroom, 0.0, 0.0, 12.0, 6.0);
            spec.start = Pose(6.0, 1.0, kPi / 2.0);
            break;
        }
        default:
            throw InvalidParameterError("build_house: variant must be 1..3");
    }
    w.rebuild_grid();
    spec.goal = GoalCommand::room(RoomCategory::kitchen);
    spec.max_ticks = 3000;
    spec.name = "house" + std::to_string(variant) + "_kitchen";
    spec.validate();
    return spec;
}

ScenarioSpec with_goal(const ScenarioSpec& base, const GoalCommand& goal, const std::string& name) {
    ScenarioSpec spec = base;
    spec.goal = goal;
    spec.name = name;
    spec.validate();
    return spec;
}

} // namespace dynacon
