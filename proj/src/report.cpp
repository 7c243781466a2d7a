#include "weylrec/report.hpp"

#include <functional>
#include <sstream>

namespace weylrec {

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["identity"] = identity;
    j["params"] = params;
    j["status"] = status;
    j["cells_checked"] = cells_checked;
    j["first_failure"] = first_failure.is_null() ? nlohmann::json() : first_failure;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "identity: " << identity << "\n";
    os << "params: " << params.dump() << "\n";
    os << "status: " << status << "\n";
    os << "cells_checked: " << cells_checked << "\n";
    if (!first_failure.is_null()) os << "first_failure: " << first_failure.dump() << "\n";
    if (!notes.empty()) os << "notes: " << notes.dump() << "\n";
    return os.str();
}

ReportBuilder::ReportBuilder(std::string identity, nlohmann::json params) {
    rep_.identity = std::move(identity);
    rep_.params = std::move(params);
}

void ReportBuilder::cell(bool ok, const std::function<nlohmann::json()>& describe_failure) {
    ++rep_.cells_checked;
    if (!ok) fail(describe_failure());
}

void ReportBuilder::fail(nlohmann::json description) {
    if (rep_.status == "pass") {
        rep_.status = "fail";
        rep_.first_failure = std::move(description);
    } else if (rep_.first_failure.is_null()) {
        rep_.first_failure = std::move(description);
    }
}

void ReportBuilder::inconclusive(nlohmann::json why) {
    if (rep_.status != "fail") {
        rep_.status = "inconclusive";
        if (rep_.first_failure.is_null()) rep_.first_failure = std::move(why);
    }
}

}  // namespace weylrec
