#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relpat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A search or enumeration exceeded its configured budget.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

} // namespace relpat
