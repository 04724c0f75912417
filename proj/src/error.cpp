#include "cyclesteg/error.hpp"

namespace cyclesteg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonOctetLength: return "NonOctetLength";
    case ErrorCode::PayloadTooLarge: return "PayloadTooLarge";
    case ErrorCode::TruncatedHeader: return "TruncatedHeader";
    case ErrorCode::TruncatedBody: return "TruncatedBody";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::PayloadExceedsCapacity: return "PayloadExceedsCapacity";
    case ErrorCode::RequestExceedsCapacity: return "RequestExceedsCapacity";
    case ErrorCode::MissingKey: return "MissingKey";
    case ErrorCode::UnexpectedKey: return "UnexpectedKey";
    case ErrorCode::InvalidKey: return "InvalidKey";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cyclesteg
