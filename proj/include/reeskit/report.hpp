#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace reeskit {

using Json = nlohmann::ordered_json;

inline std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Machine-readable command result. Fields have a fixed order; timing_ms is
// informational and excluded from any determinism comparison.
struct Report {
    std::string command;
    std::string input_hash;
    Json payload = Json::object();
    std::vector<std::string> warnings;
    double timing_ms = 0.0;
    int exit_code = 0;

    Json to_json() const {
        Json j;
        j["schema_version"] = 1;
        j["command"] = command;
        j["input_hash"] = input_hash;
        j["payload"] = payload;
        j["warnings"] = warnings;
        j["timing_ms"] = timing_ms;
        return j;
    }

    // aligned plain-text rendering
    std::string to_text() const {
        std::string out;
        out += "command     " + command + "\n";
        out += "input_hash  " + input_hash + "\n";
        render(payload, "", out);
        for (const auto& w : warnings) out += "warning     " + w + "\n";
        return out;
    }

private:
    static void render(const Json& j, const std::string& prefix, std::string& out) {
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it)
                render(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        } else if (j.is_array()) {
            bool scalars = true;
            for (const auto& v : j)
                if (v.is_object() || v.is_array()) scalars = false;
            if (scalars) {
                std::string line;
                for (const auto& v : j) {
                    if (!line.empty()) line += ", ";
                    line += v.is_string() ? v.get<std::string>() : v.dump();
                }
                out += pad(prefix) + line + "\n";
            } else {
                int k = 0;
                for (const auto& v : j) render(v, prefix + "[" + std::to_string(k++) + "]", out);
            }
        } else {
            out += pad(prefix) + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
        }
    }
    static std::string pad(const std::string& key) {
        std::string s = key;
        if (s.size() < 12) s += std::string(12 - s.size(), ' ');
        else s += " ";
        return s;
    }
};

} // namespace reeskit
