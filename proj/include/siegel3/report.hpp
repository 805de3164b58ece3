// Structured verification reports with deterministic serialization.
#ifndef SIEGEL3_REPORT_HPP
#define SIEGEL3_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "siegel3/version.hpp"

namespace siegel3 {

enum class CheckStatus { pass, fail, skipped };

struct CheckRecord {
    std::string name;    // stable identifier, unique within a report
    std::string claim;   // the mathematical statement being checked
    CheckStatus status{CheckStatus::fail};
    std::string details;
};

struct VerificationReport {
    std::string version{kVersion};
    uint64_t seed{0};
    std::vector<CheckRecord> checks;

    void add(std::string name, std::string claim, bool ok, std::string details = "") {
        checks.push_back({std::move(name), std::move(claim),
                          ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)});
    }
    void add_skipped(std::string name, std::string claim, std::string details = "") {
        checks.push_back({std::move(name), std::move(claim), CheckStatus::skipped,
                          std::move(details)});
    }

    size_t failures() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) ++n;
        return n;
    }
    bool all_passed() const { return failures() == 0; }

    const CheckRecord* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    // canonical bytes: deterministic given identical inputs and seed
    std::string to_json() const {
        nlohmann::ordered_json j;
        j["tool"] = "siegel3";
        j["version"] = version;
        j["seed"] = seed;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["claim"] = c.claim;
            jc["status"] = c.status == CheckStatus::pass   ? "pass"
                           : c.status == CheckStatus::fail ? "fail"
                                                           : "skipped";
            if (!c.details.empty()) jc["details"] = c.details;
            arr.push_back(std::move(jc));
        }
        j["checks"] = std::move(arr);
        j["failures"] = failures();
        return j.dump(2) + "\n";
    }

    std::string to_markdown() const {
        std::string out;
        out += "# Verification report\n\n";
        out += "tool: siegel3 " + version + "  \n";
        out += "seed: " + std::to_string(seed) + "\n\n";
        out += "| status | check | claim | details |\n|---|---|---|---|\n";
        for (const auto& c : checks) {
            const char* s = c.status == CheckStatus::pass   ? "PASS"
                            : c.status == CheckStatus::fail ? "FAIL"
                                                            : "SKIP";
            out += "| " + std::string(s) + " | " + c.name + " | " + c.claim + " | " + c.details +
                   " |\n";
        }
        out += "\n";
        out += all_passed() ? "All checks passed.\n"
                            : (std::to_string(failures()) + " check(s) failed.\n");
        return out;
    }
};

}  // namespace siegel3

#endif
