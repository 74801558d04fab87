#ifndef AXTK_REPORT_HPP
#define AXTK_REPORT_HPP

#include <string>
#include <vector>

namespace axtk {

/// One named verdict with a human-readable witness/detail line.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Deterministic, ordered result of a CLI command. The text and machine
/// renderings agree on every verdict; rendering is byte-stable for identical
/// inputs.
struct Report {
    std::string command;
    std::string title;
    std::vector<CheckResult> checks;

    bool pass() const;
    void add(const std::string& name, bool ok, const std::string& detail = "");

    /// Plain-text rendering; `color` adds ANSI color to the verdict words.
    std::string render_text(bool color = false) const;
    /// JSON rendering as a string (stable key order).
    std::string render_machine() const;
};

/// Resolves the report color switch: the AXTK_COLOR environment variable
/// ("always" / "never" / "auto"), defaulting to auto = on for terminals.
bool color_enabled(bool stdout_is_tty);

}  // namespace axtk

#endif
