#pragma once

#include <string>
#include <vector>

#include "dynacon/prompting.hpp"
#include "dynacon/reasoning.hpp"

namespace dynacon {

// One chat-completion round trip: POST {"model", "messages"} to the endpoint,
// return choices[0].message.content verbatim. Transient transport failures and
// 5xx statuses are retried up to 2 times with backoff; other non-success
// statuses fail immediately. Endpoint/key fall back to DYNACON_LLM_ENDPOINT
// and DYNACON_LLM_KEY.
std::string query_llm(const PromptBundle& bundle, const std::vector<QueryMessage>& history,
                      const BackendConfig& config);

} // namespace dynacon
