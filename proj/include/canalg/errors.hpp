#pragma once

#include <stdexcept>
#include <string>

namespace canalg {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad type, wrongly shaped vector, unparsable text.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// An operation was called outside its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed the caller-supplied cardinality cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// The request lies outside the range where the closed results are proved,
// or outside the configured brute-force scope.
class OutOfRange : public Error {
public:
    using Error::Error;
};

}  // namespace canalg
