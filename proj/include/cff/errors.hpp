#pragma once

#include <stdexcept>
#include <string>

namespace cff {

// Caller broke a documented precondition (shape mismatch, bad range, ...).
struct contract_error : std::invalid_argument {
    explicit contract_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Input bytes do not form a valid file (bad magic, truncation, bad payload).
struct format_error : std::runtime_error {
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values reached a place they must never reach; training halts.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Statistics cannot be computed on this sample (zero variance, too few points).
struct degenerate_error : std::runtime_error {
    explicit degenerate_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cff
