#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hacs {

// Node ids are 0-based inside the library; files and CLI output use 1-based ids.
using NodeId = std::int32_t;
using ClusterId = std::int32_t;

// Tour weights stay integral end to end; TSPLIB distances are integers.
using Weight = std::int64_t;
using Distance = std::int32_t;

// Stored for intra-cluster pairs and the diagonal. Never a valid distance.
inline constexpr Distance kForbiddenDistance = -1;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    // Prefixes an already formatted error with context such as a file path.
    ParseError(const std::string& context, const ParseError& inner)
        : Error(context + ": " + inner.what()), line_(inner.line()) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// Structurally parsed input that violates the instance invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A node sequence that is not a feasible tour of the instance.
class FeasibilityError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// The exhaustive oracle refuses instances whose search space exceeds its budget.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace hacs
