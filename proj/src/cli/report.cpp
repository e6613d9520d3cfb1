#include "hcert/cli/report.hpp"

namespace hcert::cli {

std::string status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

void Report::add(std::string name, std::string anchor, Status status, json data)
{
    records.push_back({std::move(name), std::move(anchor), status, std::move(data)});
}

bool Report::any_failed() const
{
    for (const auto& r : records)
        if (r.status == Status::fail) return true;
    return false;
}

int Report::exit_code() const
{
    if (resource_error) return 3;
    return any_failed() ? 1 : 0;
}

json Report::to_json() const
{
    json recs = json::array();
    for (const auto& r : records)
        recs.push_back({{"name", r.name}, {"anchor", r.anchor}, {"status", status_name(r.status)}, {"data", r.data}});
    json j = {{"tool", kToolName}, {"version", kToolVersion}, {"config", config}, {"records", recs}};
    if (resource_error) j["resource_error"] = *resource_error;
    return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::string Report::summary() const
{
    std::string s;
    for (const auto& r : records) s += status_name(r.status) + "  " + r.name + "  (" + r.anchor + ")\n";
    if (resource_error) s += "resource error: " + *resource_error + "\n";
    return s;
}

}  // namespace hcert::cli
