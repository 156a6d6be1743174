#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace vcq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph text; line() is 1-based, 0 when the problem is not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Raised when an oracle for k-connected graphs is requested on a graph that is not.
class NotKConnected : public Error {
public:
    explicit NotKConnected(const std::string& what,
                           std::optional<std::pair<std::uint32_t, std::uint32_t>> witness = std::nullopt)
        : Error(what), witness_(witness) {}

    const std::optional<std::pair<std::uint32_t, std::uint32_t>>& witness() const noexcept { return witness_; }

private:
    std::optional<std::pair<std::uint32_t, std::uint32_t>> witness_;
};

// Oracle file could not be decoded (bad magic, unsupported version, truncation).
class FormatError : public Error {
public:
    using Error::Error;
};

// A structural guarantee failed during construction. Signals bad input or a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace vcq
