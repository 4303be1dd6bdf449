#pragma once

#include <stdexcept>
#include <string>

namespace mssms {

// Raised when a solver's state count exceeds the configured budget
// (MSSMS_BUDGET in the CLI). Callers treat it as "answer unavailable",
// not as a fatal error.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

}  // namespace mssms
