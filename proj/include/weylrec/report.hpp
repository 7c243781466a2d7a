#pragma once

#include <functional>
#include <string>

#include <json.hpp>

namespace weylrec {

// Outcome of one identity verification. Status is "pass", "fail" or
// "inconclusive" (the last only when a stabilization re-run disagrees).
struct Report {
    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    std::string status = "pass";
    long cells_checked = 0;
    nlohmann::json first_failure;  // null when none
    nlohmann::json notes = nlohmann::json::object();

    bool passed() const { return status == "pass"; }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

class ReportBuilder {
public:
    ReportBuilder(std::string identity, nlohmann::json params);
    void cell(bool ok, const std::function<nlohmann::json()>& describe_failure);
    void cell_pass() { ++rep_.cells_checked; }
    void fail(nlohmann::json description);
    void inconclusive(nlohmann::json why);
    void note(const std::string& key, nlohmann::json value) { rep_.notes[key] = std::move(value); }
    bool failed() const { return rep_.status == "fail"; }
    Report finish() { return rep_; }

private:
    Report rep_;
};

}  // namespace weylrec
