#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conceptminer {

/// Malformed dataset text. Carries the 1-based line number when one applies.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A size limit (enumeration guard, rule-expansion cap) would be exceeded.
class GuardError : public std::runtime_error {
public:
    GuardError(const std::string& what, std::size_t limit)
        : std::runtime_error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}

    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

/// Caller broke an operation's precondition.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace conceptminer
