#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bnmodes/network.hpp"

namespace bnmodes {

struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
    // Observations reported without being treated as failures.
    bool informational = false;
    // First counterexample, or why the property was skipped.
    std::string detail;

    bool skipped() const noexcept { return checked == 0; }
    bool ok() const noexcept { return informational || violations == 0; }
};

struct PropertyOptions {
    std::uint64_t seed = 1;
    // Random configuration sets for the set-level laws.
    std::size_t random_sets = 32;
    // Memory vectors drawn from {1,2,3}^n; exhaustive when 3^n fits.
    std::size_t memory_vectors = 27;
    unsigned max_schedule_dimension = 5;
    bool informational = true;
    Limits limits;
};

std::vector<PropertyResult> check_properties(const BooleanNetwork& net, const PropertyOptions& options = {});

bool all_ok(const std::vector<PropertyResult>& results);

// "PASS name (checked N)" / "FAIL name: V of N violated; detail" / "INFO ..." / "SKIP ...".
std::string to_string(const PropertyResult& r);

} // namespace bnmodes
