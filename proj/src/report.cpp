#include "macfock/report.hpp"

namespace macfock {

void Report::set_param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
}

void Report::fail_with(const std::string& what) {
    if (status == Status::pass) {
        status = Status::fail;
        first_discrepancy = what;
    }
}

const char* Report::status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string Report::text() const {
    std::string out = "identity: " + identity + "\n";
    for (const auto& [k, v] : params) out += k + ": " + v + "\n";
    out += std::string("status: ") + status_name(status) + "\n";
    if (!first_discrepancy.empty()) out += "first-discrepancy: " + first_discrepancy + "\n";
    return out;
}

std::vector<std::pair<std::string, std::string>> Report::kv() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("identity", identity);
    for (const auto& p : params) out.push_back(p);
    out.emplace_back("status", status_name(status));
    if (!first_discrepancy.empty()) out.emplace_back("first-discrepancy", first_discrepancy);
    return out;
}

}  // namespace macfock
