#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pbsym {

enum class CheckStatus { pass, fail, skipped };

// One named verification with its outcome.  A failing check always carries a
// rendered witness (the offending residual or entry); a skipped check carries
// the reason it did not run.
struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string witness;
};

// Outcome of one suite: parameter echo plus an ordered list of checks.  The
// rendering is fully deterministic -- insertion order is preserved and no
// clock or environment data is included -- so identical configurations
// produce byte-identical output.
struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;

    void add_param(std::string key, std::string value);
    void add_pass(std::string name);
    void add_fail(std::string name, std::string witness);
    void add_skip(std::string name, std::string reason);
    // Convenience: pass/fail from a predicate, attaching the witness only on
    // failure.
    void record(std::string name, bool ok, const std::string& witness_on_fail);

    int pass_count() const;
    int fail_count() const;
    int skip_count() const;
    bool all_passed() const { return fail_count() == 0; }

    std::string to_json() const;
    std::string to_markdown() const;
};

// Renders several suite reports as one document.  For JSON the result is an
// array; for markdown the sections are concatenated.  Used by the CLI when a
// run covers more than one suite.
std::string render_json(const std::vector<Report>& reports);
std::string render_markdown(const std::vector<Report>& reports);

}
