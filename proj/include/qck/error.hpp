#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qck {

enum class ErrorKind {
    IndexOutOfRange,
    NonReducedWord,
    NotSkewSymmetric,
    ShapeMismatch,
    SizeMismatch,
    Parse,
    InvalidString,
    CrossCheckFailed,
    InvalidType,
    ExpressionNotUnit,
    AutoConstructionFailed,
    IndexOutOfDomain,
    Unsolvable,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Raised when two independent computations of the same quantity disagree.
inline void cross_check(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::CrossCheckFailed, what);
}

} // namespace qck
