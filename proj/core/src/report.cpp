#include "axtk/report.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace axtk {

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::add(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok, detail});
}

std::string Report::render_text(bool color) const {
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* reset = color ? "\033[0m" : "";
    std::ostringstream out;
    out << "== " << command << ": " << title << "\n";
    for (const auto& c : checks) {
        out << "  [" << (c.pass ? green : red) << (c.pass ? "pass" : "FAIL") << reset << "] "
            << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
    out << (pass() ? "all checks passed" : "CHECKS FAILED") << " (" << checks.size() << " checks)\n";
    return out.str();
}

std::string Report::render_machine() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["title"] = title;
    j["pass"] = pass();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        list.push_back(e);
    }
    j["checks"] = list;
    return j.dump(2);
}

bool color_enabled(bool stdout_is_tty) {
    const char* v = std::getenv("AXTK_COLOR");
    if (v) {
        std::string s(v);
        if (s == "always") return true;
        if (s == "never") return false;
    }
    return stdout_is_tty;
}

}  // namespace axtk
