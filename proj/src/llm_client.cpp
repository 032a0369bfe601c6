#include "dynacon/llm_client.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "dynacon/errors.hpp"

namespace dynacon {

using nlohmann::json;

namespace {

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return (v && *v) ? std::string(v) : fallback;
}

// Splits "http://host:port/some/path" into base and path.
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
    const auto scheme_end = endpoint.find("://");
    const size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    const auto path_start = endpoint.find('/', host_start);
    if (path_start == std::string::npos) return {endpoint, "/v1/chat/completions"};
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

} // namespace

std::string query_llm(const PromptBundle& bundle, const std::vector<QueryMessage>& history,
                      const BackendConfig& config) {
    if (config.kind != BackendKind::llm)
        throw ConfigError("query_llm: backend kind must be llm");
    const std::string endpoint = config.endpoint.empty()
                                     ? env_or("DYNACON_LLM_ENDPOINT", "")
                                     : config.endpoint;
    if (endpoint.empty())
        throw ConfigError("query_llm: no endpoint configured");
    const std::string key = config.api_key.empty() ? env_or("DYNACON_LLM_KEY", "") : config.api_key;

    json body;
    body["model"] = config.model;
    json messages = json::array();
    messages.push_back({{"role", "system"}, {"content", bundle.rendered}});
    for (const auto& m : history)
        messages.push_back({{"role", "user"}, {"content", m.text}});
    body["messages"] = messages;

    const auto [base, path] = split_endpoint(endpoint);
    httplib::Client client(base);
    const auto timeout = std::chrono::milliseconds(
        static_cast<long long>(config.timeout_seconds * 1000.0));
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    httplib::Headers headers;
    if (!key.empty()) headers.emplace("Authorization", "Bearer " + key);

    constexpr int max_attempts = 3; // initial try + 2 retries
    std::string last_error;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        if (attempt > 0)
            std::this_thread::sleep_for(
                std::chrono::milliseconds(config.retry_backoff_ms * (1 << (attempt - 1))));
        auto res = client.Post(path, headers, body.dump(), "application/json");
        if (!res) {
            const auto err = res.error();
            last_error = httplib::to_string(err);
            if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read)
                last_error = "timeout: " + last_error;
            continue; // transport failure, retry
        }
        if (res->status >= 500) {
            last_error = "HTTP " + std::to_string(res->status);
            continue; // server-side failure, retry
        }
        if (res->status < 200 || res->status >= 300)
            throw LlmError(LlmError::Kind::http_status,
                           "llm endpoint returned HTTP " + std::to_string(res->status));
        try {
            const json reply = json::parse(res->body);
            return reply.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const json::exception& e) {
            throw LlmError(LlmError::Kind::transport,
                           std::string("malformed completion reply: ") + e.what());
        }
    }
    const bool timed_out = last_error.rfind("timeout:", 0) == 0;
    throw LlmError(timed_out ? LlmError::Kind::timeout : LlmError::Kind::transport,
                   "llm request failed after " + std::to_string(max_attempts) +
                       " attempts: " + last_error);
}

} // namespace dynacon
