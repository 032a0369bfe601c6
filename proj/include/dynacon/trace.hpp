#pragma once

#include <string>
#include <vector>

#include "dynacon/navctl.hpp"

namespace dynacon {

// One JSONL line per tick with keys tick, pose, cmd, list_hash, verdict,
// goal_point, list_names. Serialization is deterministic so identical runs
// produce byte-identical traces.
std::string trace_record_to_json(const TickRecord& rec);

std::string trace_to_jsonl(const std::vector<TickRecord>& records);

void write_trace(const std::vector<TickRecord>& records, const std::string& path);

std::vector<TickRecord> read_trace(const std::string& path);

} // namespace dynacon
