#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arifs {

enum class ErrorCode {
  InvalidArgument,
  Io,
  EmptyFile,
  MissingValue,
  RaggedRow,
  MalformedCsv,
  FeatureOutOfRange,
  SizeOutOfRange,
  LengthMismatch,
  DimensionTooSmall,
  RangeUnsupported,
  EnumerationTooLarge,
  NoScorableFeature,
  EmptySelection,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure surfaced by the library is an arifs::Error carrying a code,
// so callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arifs
