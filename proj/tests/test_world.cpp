#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>

#include "dynacon/builtin_worlds.hpp"
#include "dynacon/errors.hpp"
#include "dynacon/scenario_io.hpp"
#include "dynacon/world.hpp"

using namespace dynacon;

TEST_CASE("rasterize: empty wall list leaves every cell free") {
    const auto grid = rasterize({}, 10.0, 10.0, 0.25);
    CHECK(grid.cols == 40);
    CHECK(grid.rows == 40);
    for (int y = 0; y < grid.rows; ++y)
        for (int x = 0; x < grid.cols; ++x)
            CHECK_FALSE(grid.is_occupied(x, y));
}

TEST_CASE("rasterize: horizontal wall occupies the inflated band") {
    const std::vector<Segment> walls = {{{0.0, 5.0}, {10.0, 5.0}}};
    const auto grid = rasterize(walls, 10.0, 10.0, 0.25, 0.3);
    for (int y = 0; y < grid.rows; ++y) {
        const double cy = (y + 0.5) * 0.25;
        const bool in_band = std::abs(cy - 5.0) <= 0.3;
        for (int x = 0; x < grid.cols; ++x)
            CHECK(grid.is_occupied(x, y) == in_band);
    }
}

TEST_CASE("rasterize: cell occupied iff center within radius of some wall") {
    // independent per-cell check against the distance definition
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(0.0, 8.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Segment> walls;
        for (int i = 0; i < 4; ++i)
            walls.push_back({{coord(rng), coord(rng)}, {coord(rng), coord(rng)}});
        const auto grid = rasterize(walls, 8.0, 8.0, 0.25, 0.3);
        for (int y = 0; y < grid.rows; ++y) {
            for (int x = 0; x < grid.cols; ++x) {
                const Point c = grid.center(x, y);
                bool near_wall = false;
                for (const auto& w : walls)
                    if (point_segment_distance(c, w) <= 0.3) near_wall = true;
                REQUIRE(grid.is_occupied(x, y) == near_wall);
            }
        }
    }
}

TEST_CASE("rasterize: invalid parameters") {
    CHECK_THROWS_AS(rasterize({}, 10.0, 10.0, 0.0), InvalidParameterError);
    CHECK_THROWS_AS(rasterize({}, 10.0, 10.0, -0.5), InvalidParameterError);
    const std::vector<Segment> outside = {{{-1.0, 0.0}, {5.0, 0.0}}};
    CHECK_THROWS_AS(rasterize(outside, 10.0, 10.0, 0.25), InvalidParameterError);
}

TEST_CASE("pose: theta normalized into (-pi, pi]") {
    CHECK(Pose(0, 0, 3 * std::numbers::pi).theta == doctest::Approx(std::numbers::pi));
    CHECK(Pose(0, 0, -std::numbers::pi).theta == doctest::Approx(std::numbers::pi));
    CHECK(Pose(0, 0, 0.5).theta == doctest::Approx(0.5));
    CHECK(normalize_angle(-3.5 * std::numbers::pi) == doctest::Approx(0.5 * std::numbers::pi));
}

namespace {

std::vector<const WorldObject*> plates_on(const OccupancyWorld& world, double y) {
    std::vector<const WorldObject*> out;
    for (const auto& o : world.objects)
        if (o.kind.is_plate() && o.position.y == y) out.push_back(&o);
    std::sort(out.begin(), out.end(),
              [](const WorldObject* a, const WorldObject* b) { return a->position.x < b->position.x; });
    return out;
}

} // namespace

TEST_CASE("corridor 1: ten plates, monotone along each wall") {
    const auto spec = build_corridor(1, "T1");
    int plate_count = 0;
    for (const auto& o : spec.world.objects)
        if (o.kind.is_plate()) ++plate_count;
    CHECK(plate_count == 10);

    const auto upper = plates_on(spec.world, 3.5);
    const auto lower = plates_on(spec.world, 0.5);
    REQUIRE(upper.size() == 5);
    REQUIRE(lower.size() == 5);
    for (size_t i = 1; i < upper.size(); ++i)
        CHECK(upper[i]->kind.plate_number > upper[i - 1]->kind.plate_number);
    for (size_t i = 1; i < lower.size(); ++i)
        CHECK(lower[i]->kind.plate_number < lower[i - 1]->kind.plate_number);
}

TEST_CASE("corridor 1: T2 starts at the corridor midpoint") {
    const auto spec = build_corridor(1, "T2");
    CHECK(spec.start.x == doctest::Approx(spec.world.width / 2.0));
}

TEST_CASE("corridor 2: numbering wraps counter-clockwise around the loop") {
    const auto spec = build_corridor(2, "T4");
    // traverse the -y wall west-to-east, then the +y wall east-to-west
    auto lower = plates_on(spec.world, 0.5);
    auto upper = plates_on(spec.world, 3.5);
    REQUIRE(lower.size() + upper.size() == 10);
    std::vector<int> ring;
    for (const auto* p : lower) ring.push_back(p->kind.plate_number);
    for (auto it = upper.rbegin(); it != upper.rend(); ++it)
        ring.push_back((*it)->kind.plate_number);
    for (size_t i = 1; i < ring.size(); ++i)
        CHECK(ring[i] == ring[i - 1] + 1);
    CHECK(ring.front() == 201);
    CHECK(ring.back() == 210);
}

TEST_CASE("corridor 3: thirteen plates, monotone along each leg, corner start") {
    const auto spec = build_corridor(3, "T8");
    int plate_count = 0;
    for (const auto& o : spec.world.objects)
        if (o.kind.is_plate()) ++plate_count;
    CHECK(plate_count == 13);

    std::vector<int> bottom_leg, right_leg;
    for (const auto& o : spec.world.objects) {
        if (!o.kind.is_plate()) continue;
        if (o.position.y == 0.5) bottom_leg.push_back(o.kind.plate_number);
        if (o.position.x == 13.5 && o.position.y > 1.0) right_leg.push_back(o.kind.plate_number);
    }
    CHECK(std::is_sorted(bottom_leg.begin(), bottom_leg.end()));
    CHECK(std::is_sorted(right_leg.begin(), right_leg.end()));

    // "center of the corner": inside the overlap of both arms
    CHECK(spec.start.x > 10.0);
    CHECK(spec.start.x < 14.0);
    CHECK(spec.start.y < 4.0);
}

TEST_CASE("corridor builder rejects bad input") {
    CHECK_THROWS_AS(build_corridor(4, "T1"), InvalidParameterError);
    CHECK_THROWS_AS(build_corridor(1, "T9"), InvalidParameterError);
    CHECK_THROWS_AS(build_corridor(2, "T1"), InvalidParameterError); // tag of corridor 1
}

TEST_CASE("house 2 has no interior partitions") {
    const auto spec = build_house(2);
    for (const auto& wall : spec.world.walls) {
        const bool on_boundary =
            (wall.a.x == wall.b.x && (wall.a.x == 0.0 || wall.a.x == spec.world.width)) ||
            (wall.a.y == wall.b.y && (wall.a.y == 0.0 || wall.a.y == spec.world.height));
        CHECK(on_boundary);
    }
}

TEST_CASE("houses 1 and 3 have interior partitions") {
    for (int variant : {1, 3}) {
        const auto spec = build_house(variant);
        int interior = 0;
        for (const auto& wall : spec.world.walls) {
            const bool on_boundary =
                (wall.a.x == wall.b.x && (wall.a.x == 0.0 || wall.a.x == spec.world.width)) ||
                (wall.a.y == wall.b.y && (wall.a.y == 0.0 || wall.a.y == spec.world.height));
            if (!on_boundary) ++interior;
        }
        CHECK(interior > 0);
    }
}

TEST_CASE("house builder rejects unknown variants") {
    CHECK_THROWS_AS(build_house(0), InvalidParameterError);
    CHECK_THROWS_AS(build_house(4), InvalidParameterError);
}

TEST_CASE("scenario round-trip preserves structure") {
    for (const auto& spec :
         {build_corridor(1, "T1"), build_corridor(3, "T7"), build_house(1), build_house(3)}) {
        const std::string text = scenario_to_json(spec);
        const ScenarioSpec loaded = parse_scenario_json(text, "roundtrip");
        CHECK(loaded.name == spec.name);
        CHECK(loaded.start.x == spec.start.x);
        CHECK(loaded.start.y == spec.start.y);
        CHECK(loaded.start.theta == spec.start.theta);
        CHECK(loaded.max_ticks == spec.max_ticks);
        CHECK(loaded.goal.raw_text == spec.goal.raw_text);
        CHECK(loaded.world.walls.size() == spec.world.walls.size());
        REQUIRE(loaded.world.objects.size() == spec.world.objects.size());
        for (size_t i = 0; i < spec.world.objects.size(); ++i) {
            CHECK(loaded.world.objects[i].name == spec.world.objects[i].name);
            CHECK(loaded.world.objects[i].position.x == spec.world.objects[i].position.x);
            CHECK(loaded.world.objects[i].position.y == spec.world.objects[i].position.y);
        }
        CHECK(loaded.world.regions.size() == spec.world.regions.size());
        // serialization itself is deterministic
        CHECK(scenario_to_json(loaded) == text);
    }
}

TEST_CASE("bundled corridor fixtures load with the documented plate counts") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(DYNACON_SOURCE_DIR) / "fixtures" / "scenarios";
    auto count_plates = [](const ScenarioSpec& s) {
        int n = 0;
        for (const auto& o : s.world.objects)
            if (o.kind.is_plate()) ++n;
        return n;
    };
    CHECK(count_plates(load_scenario((dir / "corridor1_t1.json").string())) == 10);
    CHECK(count_plates(load_scenario((dir / "corridor3_t7.json").string())) == 13);
}

TEST_CASE("loading rejects invariant violations with a named diagnosis") {
    auto spec = build_corridor(1, "T1");
    std::string text = scenario_to_json(spec);
    // drop an object onto a wall cell
    auto broken = text;
    const auto pos = broken.find("\"x\": 2.0");
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, 8, "\"x\": 0.1");
    CHECK_THROWS_WITH_AS(parse_scenario_json(broken, "broken"),
                         doctest::Contains("occupied cell"), ScenarioError);

    CHECK_THROWS_AS(load_scenario("/nonexistent/file.json"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario_json("{not json", "bad"), ScenarioError);
}
