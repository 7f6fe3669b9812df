#pragma once
#include <stdexcept>
#include <string>

namespace qkz {

// Exact division with a nonzero remainder is always a logic bug upstream,
// so it gets its own type carrying the offending remainder.
struct ExactDivisionError : std::runtime_error {
    std::string remainder;
    explicit ExactDivisionError(const std::string& what, std::string rem)
        : std::runtime_error(what + " (remainder: " + rem + ")"), remainder(std::move(rem)) {}
};

} // namespace qkz
