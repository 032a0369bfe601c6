#include "dynacon/prompting.hpp"

#include <sstream>

#include "dynacon/errors.hpp"

namespace dynacon {

namespace {

std::string goal_phrase(const GoalCommand& goal) {
    if (goal.kind == GoalCommand::Kind::room_number)
        return "room " + std::to_string(goal.room_number);
    std::string pretty = to_string(goal.category);
    for (auto& c : pretty)
        if (c == '_') c = ' ';
    return "the " + pretty;
}

} // namespace

PromptBundle build_reasoning_prompt(const GoalCommand& goal, ReasoningMode mode) {
    const bool pattern_goal = goal.kind == GoalCommand::Kind::room_number;
    if (pattern_goal != (mode == ReasoningMode::pattern))
        throw InvalidParameterError("build_reasoning_prompt: mode does not match the goal variant");

    PromptBundle b;
    b.role_text =
        "You are an AI assistant for a mobile robot that must reach a destination "
        "without a map. You receive the robot's latest object list and decide which "
        "detected object the robot should move toward.";

    b.main_task_text =
        "Your main task is identifying the object most pertinent to the desired "
        "destination from the current object list. The destination is given by the "
        "command: " + goal.raw_text;

    b.instruction_a_list_format =
        "(a) The object list is a single line of the form {name, name, ...}. Names are "
        "lowercase tokens; room number plates appear as room_<number>.";

    b.instruction_b_realtime_context =
        "(b) The list reflects what the robot senses right now. It is provided whenever "
        "it undergoes changes, so later lists supersede earlier ones.";

    b.instruction_c_output_format =
        "(c) Answer with exactly one line of the form desired_object: <name>, where "
        "<name> is a member of the latest object list. If no listed object is suitable, "
        "answer desired_object: None.";

    if (mode == ReasoningMode::pattern) {
        b.instruction_d_example_scenarios =
            "(d) Example scenario: room numbers along a hallway follow a spatial pattern. "
            "If presented with a decreasing pattern, the position of room number 101 will "
            "be farther than 102 when the robot is currently located at room 103. Pick the "
            "plate whose number is closest to the goal number and update the choice as new "
            "plates appear.";
    } else {
        b.instruction_d_example_scenarios =
            "(d) Example scenario: objects belong to rooms by their function. To reach the "
            "kitchen, locate and move to the sink to reach the kitchen; to reach the living "
            "room, move to the sofa. Pick a listed object whose room matches the goal, and "
            "answer None when no listed object belongs there.";
    }

    std::ostringstream out;
    out << "Role:\n" << b.role_text << "\n\n";
    out << "Main Task:\n" << b.main_task_text << "\n\n";
    out << "Instruction:\n"
        << b.instruction_a_list_format << "\n"
        << b.instruction_b_realtime_context << "\n"
        << b.instruction_c_output_format << "\n"
        << b.instruction_d_example_scenarios << "\n";
    b.rendered = out.str();
    return b;
}

std::string build_unstructured_prompt(const GoalCommand& goal) {
    std::ostringstream out;
    out << "Find the desired object using context-aware navigation.\n"
        << "The desired object is within the object list most relevant to the desired goal.\n"
        << "The object list is provided whenever it undergoes changes.\n"
        << "If a room number is obtained from the room number plate, calculate the absolute "
           "difference between the desired goal and each room number plate. Select the one "
           "with the smallest absolute difference as the desired object.\n"
        << "If a specific room is specified, identify the object most suitable for "
           "categorization within the given room.\n"
        << "Going forward, I will provide you with my desired goal and an updated object "
           "list. Show me your process for reaching the desired goal.\n"
        << "Desired goal: " << goal_phrase(goal) << ".\n";
    return out.str();
}

QueryMessage format_list_update(const ObjectList& list) {
    QueryMessage m;
    m.kind = QueryMessage::Kind::list_update;
    m.tick = list.tick;
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < list.names.size(); ++i) {
        if (i) out << ", ";
        out << list.names[i];
    }
    out << "}";
    m.text = out.str();
    return m;
}

QueryMessage format_goal_command(const GoalCommand& goal, int tick) {
    QueryMessage m;
    m.kind = QueryMessage::Kind::goal_command;
    m.tick = tick;
    m.text = goal.raw_text;
    return m;
}

std::vector<std::string> parse_list_update(const std::string& text) {
    const auto open = text.find('{');
    const auto close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw InvalidParameterError("parse_list_update: missing braces");
    std::vector<std::string> names;
    std::string token;
    auto flush = [&]() {
        if (!token.empty()) {
            names.push_back(token);
            token.clear();
        }
    };
    for (size_t i = open + 1; i < close; ++i) {
        const char c = text[i];
        if (c == ',') {
            flush();
        } else if (c != ' ' && c != '\t' && c != '\n') {
            token.push_back(c);
        }
    }
    flush();
    return names;
}

} // namespace dynacon
