#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic between prime-field scalars with different moduli.
struct FieldMismatchError : Error {
  explicit FieldMismatchError(const std::string& msg) : Error("field-mismatch: " + msg) {}
};

// Incompatible matrix/complex dimensions.
struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error("shape: " + msg) {}
};

// Differentials that do not compose to zero.
struct NotAComplexError : Error {
  explicit NotAComplexError(const std::string& msg) : Error("not-a-complex: " + msg) {}
};

// A query or computation that would need data beyond the certified
// truncation window.  Never answered with a silent zero.
struct InsufficientPrecisionError : Error {
  explicit InsufficientPrecisionError(const std::string& msg)
      : Error("insufficient-precision: " + msg) {}
};

struct ResourceLimitError : Error {
  explicit ResourceLimitError(const std::string& msg) : Error("resource-limit: " + msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse: " + msg) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("usage: " + msg) {}
};

}  // namespace hlab
