#pragma once

#include <string>
#include <vector>

#include "dynacon/perception.hpp"
#include "dynacon/world.hpp"

namespace dynacon {

enum class ReasoningMode { pattern, categorical };

// Role / Main Task / Instruction(a..d), plus the concatenated rendering.
// Rendering is deterministic: identical inputs give byte-identical output.
struct PromptBundle {
    std::string role_text;
    std::string main_task_text;
    std::string instruction_a_list_format;
    std::string instruction_b_realtime_context;
    std::string instruction_c_output_format;
    std::string instruction_d_example_scenarios;
    std::string rendered;
};

struct QueryMessage {
    enum class Kind { system_setup, goal_command, list_update };
    Kind kind = Kind::list_update;
    std::string text;
    int tick = 0;
};

// Builds the single-shot reasoning prompt for a goal. The mode must match the
// goal variant: room_number goals reason over plate patterns, room_category
// goals categorize objects into rooms.
PromptBundle build_reasoning_prompt(const GoalCommand& goal, ReasoningMode mode);

// The flat baseline prompt used by the ablation harness.
std::string build_unstructured_prompt(const GoalCommand& goal);

// Renders the list in the instruction (a) serialization: {name, name, ...}.
QueryMessage format_list_update(const ObjectList& list);

QueryMessage format_goal_command(const GoalCommand& goal, int tick = 0);

// Inverse of format_list_update on name sets.
std::vector<std::string> parse_list_update(const std::string& text);

} // namespace dynacon
