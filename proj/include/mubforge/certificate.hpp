#pragma once

#include <string>
#include <vector>

namespace mubforge {

/// One verified clause: the property checked, the structural fact it
/// instantiates (e.g. "lemma3", "theorem1"), the outcome, and a witness
/// string describing the failure site when it failed.
struct CheckResult {
    std::string clause;
    std::string tag;
    bool passed = false;
    std::string witness;
};

/// A machine-checked record binding a computed object to the exact
/// identities it is supposed to satisfy. Certificates are always recomputed,
/// never trusted from disk.
class Certificate {
public:
    explicit Certificate(std::string subject) : subject_(std::move(subject)) {}

    const std::string& subject() const { return subject_; }
    const std::vector<CheckResult>& checks() const { return checks_; }

    void record(const std::string& clause, const std::string& tag, bool passed,
                const std::string& witness = "") {
        checks_.push_back({clause, tag, passed, passed ? "" : witness});
    }

    bool passed() const {
        for (const auto& c : checks_)
            if (!c.passed) return false;
        return !checks_.empty();
    }

    std::string first_failure() const {
        for (const auto& c : checks_)
            if (!c.passed) return c.clause + " [" + c.tag + "] " + c.witness;
        return "";
    }

    void merge(const Certificate& other) {
        for (const auto& c : other.checks_) checks_.push_back(c);
    }

private:
    std::string subject_;
    std::vector<CheckResult> checks_;
};

} // namespace mubforge
