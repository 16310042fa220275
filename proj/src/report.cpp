#include "pbsym/report.hpp"

#include <json.hpp>

#include "pbsym/version.hpp"

namespace pbsym {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* status_label(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

ordered_json report_to_value(const Report& r) {
    ordered_json j;
    j["suite"] = r.suite;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    j["params"] = std::move(params);
    ordered_json checks = ordered_json::array();
    for (const Check& c : r.checks) {
        ordered_json entry;
        entry["name"] = c.name;
        entry["status"] = status_label(c.status);
        if (!c.witness.empty()) entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"pass", r.pass_count()},
                    {"fail", r.fail_count()},
                    {"skipped", r.skip_count()}};
    j["version"] = kVersion;
    return j;
}

}  // namespace

void Report::add_param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
}

void Report::add_pass(std::string name) {
    checks.push_back({std::move(name), CheckStatus::pass, ""});
}

void Report::add_fail(std::string name, std::string witness) {
    if (witness.empty()) witness = "(no witness rendered)";
    checks.push_back({std::move(name), CheckStatus::fail, std::move(witness)});
}

void Report::add_skip(std::string name, std::string reason) {
    if (reason.empty()) reason = "(no reason given)";
    checks.push_back({std::move(name), CheckStatus::skipped, std::move(reason)});
}

void Report::record(std::string name, bool ok, const std::string& witness_on_fail) {
    if (ok) {
        add_pass(std::move(name));
    } else {
        add_fail(std::move(name), witness_on_fail);
    }
}

int Report::pass_count() const {
    int n = 0;
    for (const Check& c : checks) n += c.status == CheckStatus::pass;
    return n;
}

int Report::fail_count() const {
    int n = 0;
    for (const Check& c : checks) n += c.status == CheckStatus::fail;
    return n;
}

int Report::skip_count() const {
    int n = 0;
    for (const Check& c : checks) n += c.status == CheckStatus::skipped;
    return n;
}

std::string Report::to_json() const { return report_to_value(*this).dump(2) + "\n"; }

std::string Report::to_markdown() const {
    std::string out;
    out += "## Suite: " + suite + "\n\n";
    if (!params.empty()) {
        out += "| parameter | value |\n|---|---|\n";
        for (const auto& [key, value] : params) out += "| " + key + " | " + value + " |\n";
        out += "\n";
    }
    out += "| check | status | witness |\n|---|---|---|\n";
    for (const Check& c : checks) {
        out += "| " + c.name + " | " + status_label(c.status) + " | ";
        out += c.witness.empty() ? std::string("-") : c.witness;
        out += " |\n";
    }
    out += "\nSummary: " + std::to_string(pass_count()) + " passed, " +
           std::to_string(fail_count()) + " failed, " + std::to_string(skip_count()) +
           " skipped (version " + kVersion + ")\n";
    return out;
}

std::string render_json(const std::vector<Report>& reports) {
    if (reports.size() == 1) return reports.front().to_json();
    ordered_json arr = ordered_json::array();
    for (const Report& r : reports) arr.push_back(report_to_value(r));
    return arr.dump(2) + "\n";
}

std::string render_markdown(const std::vector<Report>& reports) {
    std::string out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out += "\n";
        out += reports[i].to_markdown();
    }
    return out;
}

}
