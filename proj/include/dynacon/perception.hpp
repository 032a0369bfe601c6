#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dynacon/world.hpp"

namespace dynacon {

// Snapshot of the objects currently detected; names are kept sorted so that
// two lists with equal membership compare and serialize identically.
struct ObjectList {
    int tick = 0;
    std::vector<std::string> names; // sorted, no duplicates
    std::map<std::string, Point> positions;

    bool contains(const std::string& name) const { return positions.count(name) != 0; }
    bool empty() const { return names.empty(); }
};

// Visits every grid cell the segment from a to b passes through.
// Returns false (and stops) if the visitor returns false.
bool walk_ray_cells(const OccupancyGrid& grid, const Point& a, const Point& b,
                    const std::function<bool(int, int)>& visit);

// True when no occupied cell lies on the segment between the two points.
bool line_of_sight(const OccupancyGrid& grid, const Point& a, const Point& b);

// Detects objects within range and, when occlusion is on, with a clear ray.
ObjectList sense(const OccupancyWorld& world, const Pose& pose, const SensorParams& params,
                 int tick);

// True iff the name sets differ; position drift alone is not a change.
bool list_changed(const ObjectList& prev, const ObjectList& curr);

// FNV-1a over the sorted names; used by the trace log.
uint64_t object_list_hash(const ObjectList& list);

// Single-writer cell holding the latest list; re-senses every period_ticks
// and reports whether membership changed since the previous sample.
class ObjectServer {
public:
    ObjectServer(const OccupancyWorld& world, SensorParams params)
        : world_(&world), params_(params) {}

    // Samples on the period (tick 0 included); returns true when the list
    // membership changed on this call.
    bool update(const Pose& pose, int tick);

    const ObjectList& current() const { return current_; }
    const SensorParams& params() const { return params_; }

private:
    const OccupancyWorld* world_;
    SensorParams params_;
    ObjectList current_;
    bool primed_ = false;
};

} // namespace dynacon
