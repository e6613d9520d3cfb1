#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hcert::cli {

using nlohmann::json;

inline constexpr const char* kToolName = "hcert";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Status { pass, fail, inconclusive };

std::string status_name(Status s);

struct Record {
    std::string name;
    /// Statement the check is about, in words.
    std::string anchor;
    Status status = Status::inconclusive;
    json data = json::object();
};

struct Report {
    json config = json::object();
    std::vector<Record> records;
    /// Set when a resource limit stopped the run; records are then partial.
    std::optional<std::string> resource_error;

    void add(std::string name, std::string anchor, Status status, json data);
    bool any_failed() const;
    /// 0 all clear, 1 some record failed, 3 resource error.
    int exit_code() const;
    json to_json() const;
    /// Pretty-printed JSON with sorted keys and a trailing newline.
    std::string dump() const;
    /// One line per record: status, name and anchor.
    std::string summary() const;
};

inline Status pass_if(bool ok) { return ok ? Status::pass : Status::fail; }

}  // namespace hcert::cli
