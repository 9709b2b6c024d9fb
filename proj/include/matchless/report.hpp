#pragma once

// Machine-readable reports. Every numeric value is an exact string (decimal
// integer or "p/q"); wall-time fields are the only nondeterministic part,
// so identical runs diff clean once "wall_ms" keys are ignored.

#include "matchless/bigmath.hpp"
#include "matchless/family.hpp"
#include "matchless/partition_stats.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchless {

using Json = nlohmann::ordered_json;

enum class TaskStatus { Pass, Fail, BudgetExhausted, Error };

inline const char* status_name(TaskStatus s) {
    switch (s) {
        case TaskStatus::Pass: return "pass";
        case TaskStatus::Fail: return "fail";
        case TaskStatus::BudgetExhausted: return "budget-exhausted";
        case TaskStatus::Error: return "error";
    }
    return "?";
}

struct TaskReport {
    std::string task;
    TaskStatus status = TaskStatus::Pass;
    Json values = Json::object();
    std::vector<std::string> witness;  // family text format lines
    long long nodes = -1;
    double wall_ms = 0.0;
    std::string detail;

    Json to_json() const {
        Json j;
        j["task"] = task;
        j["status"] = status_name(status);
        j["values"] = values;
        if (!witness.empty()) j["witness"] = witness;
        if (nodes >= 0) j["nodes"] = nodes;
        j["wall_ms"] = wall_ms;
        if (!detail.empty()) j["detail"] = detail;
        return j;
    }
};

struct CampaignReport {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<TaskReport> tasks;

    bool all_pass() const {
        for (const auto& t : tasks)
            if (t.status != TaskStatus::Pass) return false;
        return true;
    }

    Json to_json() const {
        Json j;
        j["campaign"] = name;
        j["seed"] = seed;
        Json arr = Json::array();
        for (const auto& t : tasks) arr.push_back(t.to_json());
        j["tasks"] = arr;
        j["all_pass"] = all_pass();
        return j;
    }

    void write(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write report file: " + path);
        out << to_json().dump(2) << '\n';
    }
};

inline std::vector<std::string> witness_lines(const SetFamily& f) {
    std::vector<std::string> lines;
    lines.push_back("n=" + std::to_string(f.n()));
    for (Mask m : f.members()) lines.push_back(format_subset(m));
    return lines;
}

inline Json check_report_json(const CheckReport& rep) {
    Json arr = Json::array();
    for (const auto& line : rep.lines) {
        Json j;
        j["check"] = line.what;
        j["ok"] = line.ok;
        j["lhs"] = line.lhs;
        j["rhs"] = line.rhs;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace matchless
