#pragma once

#include <string>
#include <utility>
#include <vector>

namespace macfock {

// Structured outcome of an identity verification: status plus the first
// discrepancy (inputs and both sides) when there is one.
struct Report {
    enum class Status { pass, fail, inconclusive };

    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    Status status = Status::pass;
    std::string first_discrepancy;

    bool passed() const { return status == Status::pass; }
    void set_param(const std::string& key, const std::string& value);
    void fail_with(const std::string& what);

    static const char* status_name(Status s);
    std::string text() const;  // one-line-per-field human form
    std::vector<std::pair<std::string, std::string>> kv() const;
};

}  // namespace macfock
