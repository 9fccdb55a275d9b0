#pragma once

#include "g2sub/sheaves.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2sub {

enum class Scope { all, geometry, sheaves, packets, g2 };
std::optional<Scope> parse_scope(const std::string& s);
std::string name(Scope s);

struct CheckResult {
    std::string name;
    std::string scope;
    bool passed = false;
    std::string witness;  // failure detail, or an informational note
};

// Runs every check in the scope; never stops at the first failure.
std::vector<CheckResult> run_checks(Scope scope, const SheafData& data = SheafData::encoded());

// Copy of the encoded tables with one deliberate error: "evs", "repmult", "fiber", or "stalks".
SheafData with_fault(const std::string& which);

}  // namespace g2sub
