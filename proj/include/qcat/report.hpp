#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qcat {

enum class Outcome { Pass, Fail, Finding };

struct Witness {
    Outcome kind = Outcome::Fail;
    std::string check;
    std::string detail;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Result of an audit. Failures are recorded, never thrown.
///
/// Counts are exact; the witness list keeps the first `witness_cap` rows in
/// the order they were observed, so reports are reproducible.
struct Report {
    std::string id;
    std::size_t checks = 0;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::size_t findings = 0;
    std::vector<Witness> witnesses;
    std::vector<std::pair<std::string, std::string>> stats;
    std::vector<std::string> notes;
    std::size_t witness_cap = 64;

    explicit Report(std::string name = {}) : id(std::move(name)) {}

    bool ok() const { return failures == 0; }

    void pass() {
        ++checks;
        ++passes;
    }

    void fail(std::string check, std::string detail) {
        ++checks;
        ++failures;
        if (witnesses.size() < witness_cap) witnesses.push_back({Outcome::Fail, std::move(check), std::move(detail)});
    }

    void finding(std::string check, std::string detail) {
        ++checks;
        ++findings;
        if (witnesses.size() < witness_cap) witnesses.push_back({Outcome::Finding, std::move(check), std::move(detail)});
    }

    /// pass() or fail() depending on `holds`.
    bool expect(bool holds, std::string check, std::string detail = {}) {
        if (holds)
            pass();
        else
            fail(std::move(check), std::move(detail));
        return holds;
    }

    void note(std::string text) { notes.push_back(std::move(text)); }

    void set_stat(const std::string& key, std::string value) {
        for (auto& [k, v] : stats) {
            if (k == key) {
                v = std::move(value);
                return;
            }
        }
        stats.emplace_back(key, std::move(value));
    }

    const std::string* stat(const std::string& key) const {
        for (const auto& [k, v] : stats)
            if (k == key) return &v;
        return nullptr;
    }

    /// Appends the other report's counts and witnesses, prefixing witness checks with its id.
    void absorb(const Report& other) {
        checks += other.checks;
        passes += other.passes;
        failures += other.failures;
        findings += other.findings;
        for (const auto& w : other.witnesses) {
            if (witnesses.size() >= witness_cap) break;
            Witness copy = w;
            if (!other.id.empty()) copy.check = other.id + "/" + copy.check;
            witnesses.push_back(std::move(copy));
        }
    }
};

inline const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Finding: return "finding";
    }
    return "?";
}

} // namespace qcat
