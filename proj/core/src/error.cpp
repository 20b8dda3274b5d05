#include "arifs/error.hpp"

namespace arifs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::RaggedRow: return "RaggedRow";
    case ErrorCode::MalformedCsv: return "MalformedCsv";
    case ErrorCode::FeatureOutOfRange: return "FeatureOutOfRange";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::RangeUnsupported: return "RangeUnsupported";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::NoScorableFeature: return "NoScorableFeature";
    case ErrorCode::EmptySelection: return "EmptySelection";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace arifs
