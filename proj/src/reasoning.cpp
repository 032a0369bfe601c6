#include "dynacon/reasoning.hpp"

#include <cstdlib>
#include <sstream>

#include "dynacon/errors.hpp"
#include "dynacon/llm_client.hpp"

namespace dynacon {

const CategoryMap& default_category_map() {
    static const CategoryMap map = {
        {"refrigerator", RoomCategory::kitchen},
        {"sink", RoomCategory::kitchen},
        {"cooking_bench", RoomCategory::kitchen},
        {"sofa", RoomCategory::living_room},
        {"television", RoomCategory::living_room},
        {"tv_cabinet", RoomCategory::living_room},
        {"bed", RoomCategory::bedroom},
        {"wardrobe", RoomCategory::bedroom},
        {"treadmill", RoomCategory::home_gym},
        {"dumbbell_rack", RoomCategory::home_gym},
        {"chair", RoomCategory::other},
        {"table", RoomCategory::other},
        {"desk", RoomCategory::other},
        {"shelf", RoomCategory::other},
        {"painting", RoomCategory::other},
    };
    return map;
}

void BackendConfig::validate() const {
    if (kind == BackendKind::llm) {
        const char* env = std::getenv("DYNACON_LLM_ENDPOINT");
        if (endpoint.empty() && (env == nullptr || *env == '\0'))
            throw ConfigError("llm backend requires an endpoint "
                              "(config or DYNACON_LLM_ENDPOINT)");
    }
    if (latency_ticks < 0) throw ConfigError("latency_ticks must be >= 0");
    if (timeout_seconds <= 0.0) throw ConfigError("timeout must be > 0");
}

ReasoningVerdict oracle_pattern(const ObjectList& list, int goal_number,
                                const std::optional<std::string>& incumbent) {
    if (goal_number < 1) throw InvalidParameterError("oracle_pattern: goal number must be >= 1");

    std::optional<std::string> best;
    int best_number = 0;
    int best_diff = 0;
    for (const auto& name : list.names) {
        const auto number = plate_number_from_name(name);
        if (!number) continue;
        const int diff = std::abs(goal_number - *number);
        if (!best || diff < best_diff) {
            best = name;
            best_number = *number;
            best_diff = diff;
        } else if (diff == best_diff) {
            if (incumbent && name == *incumbent) {
                best = name; // keep a tied incumbent to avoid goal oscillation
                best_number = *number;
            } else if (*number < best_number && !(incumbent && *best == *incumbent)) {
                best = name;
                best_number = *number;
            }
        }
    }

    ReasoningVerdict v;
    v.backend = BackendKind::oracle;
    v.tick = list.tick;
    if (best) {
        v.desired_object = best;
        std::ostringstream why;
        why << "plate " << best_number << " minimizes |" << goal_number << " - n| = " << best_diff;
        v.rationale = why.str();
    } else {
        v.rationale = "no room plates in the list";
    }
    return v;
}

ReasoningVerdict oracle_categorical(const ObjectList& list, RoomCategory goal,
                                    const CategoryMap& map) {
    ReasoningVerdict v;
    v.backend = BackendKind::oracle;
    v.tick = list.tick;
    for (const auto& name : list.names) { // sorted, so first match is lexicographic
        if (plate_number_from_name(name)) continue;
        const auto it = map.find(name_stem(name));
        if (it == map.end())
            throw ConfigError("oracle_categorical: no category mapping for stem '" +
                              name_stem(name) + "'");
        if (it->second == goal) {
            v.desired_object = name;
            v.rationale = name_stem(name) + " belongs to the " + to_string(goal);
            return v;
        }
    }
    v.rationale = "no listed object belongs to the " + to_string(goal);
    return v;
}

ReasoningVerdict parse_verdict(const std::string& raw, const ObjectList& list) {
    std::optional<std::string> token;
    std::istringstream lines(raw);
    std::string line;
    while (std::getline(lines, line)) {
        auto pos = line.find("desired_object:");
        if (pos == std::string::npos) continue;
        std::string rest = line.substr(pos + std::string("desired_object:").size());
        std::istringstream word(rest);
        std::string t;
        if (word >> t) {
            std::string extra;
            if (!(word >> extra)) token = t; // exactly one token after the colon
        }
    }
    if (!token)
        throw VerdictParseError(VerdictParseError::Kind::unparseable,
                                "reply has no 'desired_object: <name>' line");
    ReasoningVerdict v;
    v.backend = BackendKind::llm;
    v.tick = list.tick;
    v.rationale = raw;
    if (*token == "None") return v;
    if (!list.contains(*token))
        throw VerdictParseError(VerdictParseError::Kind::hallucinated,
                                "reply names '" + *token + "', which is not in the object list");
    v.desired_object = token;
    return v;
}

ReasoningVerdict reason(const GoalCommand& goal, const ObjectList& list,
                        const std::optional<std::string>& incumbent, const BackendConfig& config) {
    config.validate();
    if (config.kind == BackendKind::oracle) {
        if (goal.kind == GoalCommand::Kind::room_number)
            return oracle_pattern(list, goal.room_number, incumbent);
        return oracle_categorical(list, goal.category, default_category_map());
    }
    const ReasoningMode mode = goal.kind == GoalCommand::Kind::room_number
                                   ? ReasoningMode::pattern
                                   : ReasoningMode::categorical;
    const PromptBundle bundle = build_reasoning_prompt(goal, mode);
    std::vector<QueryMessage> history;
    history.push_back(format_goal_command(goal, list.tick));
    history.push_back(format_list_update(list));
    const std::string reply = query_llm(bundle, history, config);
    return parse_verdict(reply, list);
}

ReasoningSession::ReasoningSession(const GoalCommand& goal, BackendConfig config)
    : goal_(goal), config_(std::move(config)) {
    config_.validate();
    const ReasoningMode mode = goal.kind == GoalCommand::Kind::room_number
                                   ? ReasoningMode::pattern
                                   : ReasoningMode::categorical;
    bundle_ = build_reasoning_prompt(goal, mode);
    history_.push_back(format_goal_command(goal));
}

void ReasoningSession::submit(const ObjectList& list, const std::optional<std::string>& incumbent,
                              int tick) {
    if (pending_) throw Error("ReasoningSession: a query is already outstanding");
    ++queries_issued_;
    history_.push_back(format_list_update(list));
    ReasoningVerdict verdict;
    if (config_.kind == BackendKind::oracle) {
        verdict = goal_.kind == GoalCommand::Kind::room_number
                      ? oracle_pattern(list, goal_.room_number, incumbent)
                      : oracle_categorical(list, goal_.category, default_category_map());
    } else {
        const std::string reply = query_llm(bundle_, history_, config_);
        verdict = parse_verdict(reply, list);
    }
    verdict.tick = tick;
    pending_ = Pending{std::move(verdict), tick + config_.latency_ticks};
}

std::optional<ReasoningVerdict> ReasoningSession::poll(int tick) {
    if (!pending_ || tick < pending_->deliver_tick) return std::nullopt;
    ReasoningVerdict out = std::move(pending_->verdict);
    out.tick = tick;
    pending_.reset();
    return out;
}

} // namespace dynacon
