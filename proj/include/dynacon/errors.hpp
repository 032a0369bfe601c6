#pragma once

#include <stdexcept>
#include <string>

namespace dynacon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument to an operation (zero resolution, unknown variant, ...).
struct InvalidParameterError : Error {
    using Error::Error;
};

// Scenario file failed to parse or violated a type invariant.
struct ScenarioError : Error {
    using Error::Error;
};

// Missing category mapping or inconsistent backend configuration.
struct ConfigError : Error {
    using Error::Error;
};

// LLM gateway failures, each kind distinct so the harness can report it.
struct LlmError : Error {
    enum class Kind { timeout, transport, http_status };
    Kind kind;
    LlmError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

// Reply text did not match the output grammar, or named an unlisted object.
struct VerdictParseError : Error {
    enum class Kind { unparseable, hallucinated };
    Kind kind;
    VerdictParseError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

struct NoPathError : Error {
    using Error::Error;
};

} // namespace dynacon
