#pragma once

#include <string>

#include "dynacon/world.hpp"

namespace dynacon {

// Corridor worlds for the pattern suite. Variants:
//   1 - straight hallway, plates 201..205 ascending on the +y wall and
//       210..206 descending on the -y wall (monotone both ways)
//   2 - straight hallway, plates numbered counter-clockwise: 201..205 along
//       the -y wall, then 206..210 continuing back along the +y wall
//   3 - L-shaped hallway, 13 plates, monotone along each leg
// start_tag selects the fixture start pose and goal: T1..T3 for variant 1,
// T4..T6 for variant 2, T7..T8 for variant 3.
ScenarioSpec build_corridor(int variant, const std::string& start_tag);

// House worlds for the categorical suite; all start at the front door.
// House 2 has no interior partitions. The default goal is the kitchen;
// use with_goal to derive the other trials.
ScenarioSpec build_house(int variant);

// Copy of a scenario with a different goal command and name suffix.
ScenarioSpec with_goal(const ScenarioSpec& base, const GoalCommand& goal, const std::string& name);

} // namespace dynacon
