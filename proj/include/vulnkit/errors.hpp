#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vulnkit {

/// A solver was handed an instance outside its domain (wrong graph class,
/// non-unit weights, mismatching interval model, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Brute-force enumeration refused an instance above the configured limit.
class InstanceTooLarge : public PreconditionError {
public:
    InstanceTooLarge(std::size_t n, std::size_t limit)
        : PreconditionError("instance too large for enumeration: n=" + std::to_string(n) +
                            " exceeds limit " + std::to_string(limit)),
          n_(n), limit_(limit) {}

    std::size_t n() const noexcept { return n_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t n_;
    std::size_t limit_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace vulnkit
