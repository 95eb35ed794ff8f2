#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stmod {

/// Malformed edge-list input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input outside an operation's domain (disconnected or trivial graph, bad network).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A size guard refused the request (enumeration or brute-force limits).
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result failed a certification check that must hold by construction.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A cooperative deadline expired.
class Timeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace stmod
