#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dynacon/perception.hpp"
#include "dynacon/prompting.hpp"
#include "dynacon/world.hpp"

namespace dynacon {

enum class BackendKind { oracle, llm };

struct ReasoningVerdict {
    std::optional<std::string> desired_object; // nullopt means None
    std::string rationale;
    BackendKind backend = BackendKind::oracle;
    int tick = 0;
};

// Furniture name stem -> room category. Total over the bundled worlds.
using CategoryMap = std::map<std::string, RoomCategory>;

// Map covering every furniture stem placed by the built-in worlds.
const CategoryMap& default_category_map();

struct BackendConfig {
    BackendKind kind = BackendKind::oracle;
    std::string endpoint;  // llm only; DYNACON_LLM_ENDPOINT when empty
    std::string api_key;   // llm only; DYNACON_LLM_KEY when empty
    std::string model = "gpt-3.5-turbo";
    double timeout_seconds = 30.0;
    int latency_ticks = 0;
    int retry_backoff_ms = 100;

    static BackendConfig oracle_backend() { return {}; }
    void validate() const;
};

// Picks the plate minimizing |goal_number - plate_number|. Ties go to the
// incumbent when it is tied, otherwise to the lower plate number. Returns
// None when the list has no room plates.
ReasoningVerdict oracle_pattern(const ObjectList& list, int goal_number,
                                const std::optional<std::string>& incumbent);

// Picks the lexicographically-first list member whose category matches the
// goal; None when nothing matches. Unmapped furniture stems are a
// configuration error naming the stem.
ReasoningVerdict oracle_categorical(const ObjectList& list, RoomCategory goal,
                                    const CategoryMap& map);

// Extracts the last line matching `desired_object: <token>`. A token missing
// from the list is a hallucinated-object error.
ReasoningVerdict parse_verdict(const std::string& raw, const ObjectList& list);

// Dispatches on the backend kind. The llm path performs one blocking chat
// round trip (system prompt + history + the latest list) and parses the reply.
ReasoningVerdict reason(const GoalCommand& goal, const ObjectList& list,
                        const std::optional<std::string>& incumbent, const BackendConfig& config);

// Per-trial reasoning state: keeps the single-shot prompt and chat history,
// allows at most one outstanding query, and delivers verdicts latency_ticks
// after the request tick so the executive can keep moving meanwhile.
class ReasoningSession {
public:
    ReasoningSession(const GoalCommand& goal, BackendConfig config);

    bool busy() const { return pending_.has_value(); }
    // Issues a query for this list; call only when not busy.
    void submit(const ObjectList& list, const std::optional<std::string>& incumbent, int tick);
    // Returns the verdict once its delivery tick has been reached.
    std::optional<ReasoningVerdict> poll(int tick);

    int queries_issued() const { return queries_issued_; }
    const std::vector<QueryMessage>& history() const { return history_; }

private:
    GoalCommand goal_;
    BackendConfig config_;
    PromptBundle bundle_;
    std::vector<QueryMessage> history_;
    struct Pending {
        ReasoningVerdict verdict;
        int deliver_tick;
    };
    std::optional<Pending> pending_;
    int queries_issued_ = 0;
};

} // namespace dynacon
