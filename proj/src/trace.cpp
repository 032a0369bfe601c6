#include "dynacon/trace.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dynacon/errors.hpp"

namespace dynacon {

using nlohmann::json;

std::string trace_record_to_json(const TickRecord& rec) {
    json j;
    j["tick"] = rec.tick;
    j["pose"] = json::array({rec.pose.x, rec.pose.y, rec.pose.theta});
    j["cmd"] = json::array({rec.cmd.v, rec.cmd.w});
    char hash_hex[19];
    std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                  static_cast<unsigned long long>(rec.list_hash));
    j["list_hash"] = hash_hex;
    if (!rec.has_verdict)
        j["verdict"] = nullptr;
    else
        j["verdict"] = rec.verdict ? json(*rec.verdict) : json("None");
    if (rec.goal_point)
        j["goal_point"] = json::array({rec.goal_point->x, rec.goal_point->y});
    else
        j["goal_point"] = nullptr;
    j["list_names"] = rec.list_names;
    return j.dump();
}

std::string trace_to_jsonl(const std::vector<TickRecord>& records) {
    std::ostringstream out;
    for (const auto& rec : records) out << trace_record_to_json(rec) << "\n";
    return out.str();
}

void write_trace(const std::vector<TickRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open trace file for writing: " + path);
    out << trace_to_jsonl(records);
}

std::vector<TickRecord> read_trace(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open trace file: " + path);
    std::vector<TickRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        TickRecord rec;
        rec.tick = j.at("tick").get<int>();
        rec.pose = Pose(j.at("pose")[0].get<double>(), j.at("pose")[1].get<double>(),
                        j.at("pose")[2].get<double>());
        rec.cmd.v = j.at("cmd")[0].get<double>();
        rec.cmd.w = j.at("cmd")[1].get<double>();
        rec.list_hash = std::stoull(j.at("list_hash").get<std::string>(), nullptr, 16);
        if (!j.at("verdict").is_null()) {
            rec.has_verdict = true;
            const auto v = j.at("verdict").get<std::string>();
            if (v != "None") rec.verdict = v;
        }
        if (!j.at("goal_point").is_null())
            rec.goal_point = Point{j.at("goal_point")[0].get<double>(),
                                   j.at("goal_point")[1].get<double>()};
        if (j.contains("list_names"))
            rec.list_names = j.at("list_names").get<std::vector<std::string>>();
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace dynacon
