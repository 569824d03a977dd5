// Copyright cubetree authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubetree {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched vector lengths or matrix shapes.
struct DimensionError : Error {
    using Error::Error;
};

// Argument outside its documented range.
struct ParameterError : Error {
    using Error::Error;
};

// An operation that needs at least one point got none.
struct EmptyInputError : Error {
    using Error::Error;
};

// Malformed file content; offset is the byte position where parsing stopped.
struct ParseError : Error {
    ParseError(const std::string& msg, size_t at)
        : Error(msg + " (byte offset " + std::to_string(at) + ")"), offset(at) {}
    size_t offset;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace cubetree
