#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace factcheck {

enum class ErrorCode {
  kInvalidInput,
  kInvalidClaim,
  kBackendError,
  kGeneratorUnavailable,
  kEmbedderUnavailable,
  kDimensionMismatch,
  kZeroVector,
  kAllAdaptersFailed,
  kPayloadTooLarge,
  kEmptyText,
  kNotFound,
  kSchemaError,
  kLengthMismatch,
  kEmptyInput,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every recoverable failure in the library is reported as an Error carrying
// a machine-readable code; callers switch on code() rather than on type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the dataset loader; row is 1-based and counts the header line.
class SchemaError : public Error {
 public:
  SchemaError(std::size_t row, const std::string& message)
      : Error(ErrorCode::kSchemaError, "row " + std::to_string(row) + ": " + message), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace factcheck
