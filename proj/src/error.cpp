#include "lospa/error.hpp"

namespace labelled_ospa {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidCost: return "InvalidCost";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InconsistentShape: return "InconsistentShape";
    case ErrorCode::TimestepMismatch: return "TimestepMismatch";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> record)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      record_(record) {}

} // namespace labelled_ospa
