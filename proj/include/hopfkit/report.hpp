#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfkit {

struct Check {
    std::string name;
    bool passed = true;
    std::string witness;  // empty when passed
};

struct CheckList {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string witness = {});
    void append(const CheckList& other, const std::string& prefix = {});
    bool ok() const;
    const Check* find(const std::string& name) const;
    // First failing check as "name: witness", or empty.
    std::string first_failure() const;
};

// Input data that fails its defining axioms.
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& what, CheckList report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const CheckList& report() const noexcept { return report_; }

private:
    CheckList report_;
};

// Two routes to a quantity that must agree by a theorem disagreed; this is
// a defect in the library (or corrupted input that slipped through).
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hopfkit
