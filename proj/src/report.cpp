#include "hopfkit/report.hpp"

#include <algorithm>

namespace hopfkit {

void CheckList::add(std::string name, bool passed, std::string witness) {
    checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
}

void CheckList::append(const CheckList& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.witness});
}

bool CheckList::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* CheckList::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string CheckList::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return c.witness.empty() ? c.name : c.name + ": " + c.witness;
    return {};
}

}  // namespace hopfkit
