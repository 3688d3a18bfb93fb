#include "finitop/error.hpp"

namespace finitop {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingEmpty: return "MissingEmpty";
        case ErrorCode::MissingFull: return "MissingFull";
        case ErrorCode::NotClosedUnderUnion: return "NotClosedUnderUnion";
        case ErrorCode::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
        case ErrorCode::PointOutOfRange: return "PointOutOfRange";
        case ErrorCode::TooManyPoints: return "TooManyPoints";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::FingerprintMismatch: return "FingerprintMismatch";
        case ErrorCode::UnknownTheorem: return "UnknownTheorem";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::Malformed: return "Malformed";
    }
    return "Unknown";
}

TopologyError::TopologyError(ErrorCode code, const std::string& message, std::optional<Mask> first,
                             std::optional<Mask> second)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      first_(first),
      second_(second) {}

}  // namespace finitop
