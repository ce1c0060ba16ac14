#pragma once

#include <stdexcept>
#include <string>

namespace assoc {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A key contained a forbidden character or was empty.
class KeyError : public Error {
public:
    using Error::Error;
};

// A value outside an operation's domain: NaN, non-finite numbers, Text
// given to a numeric-only semiring, Text where analysis needs numbers.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed arguments: inverted ranges, duplicate keys, misaligned arrays.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Malformed CSV, triple or segment input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Stream or filesystem failure.
class IoError : public Error {
public:
    using Error::Error;
};

// Persistent table integrity or locking violation.
class StoreError : public Error {
public:
    using Error::Error;
};

}  // namespace assoc
