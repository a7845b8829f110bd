#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of different dimension n, or a literal with the wrong number of components.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A parameter outside its admissible range (r <= 0, |alpha| != 1, non-finite component, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Generator index outside [1, n].
class IndexRangeError : public Error {
public:
    IndexRangeError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Checked 64-bit integer arithmetic on the lattice overflowed.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed text; offset is the byte position where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace heis
