#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "finitop/subset.hpp"

namespace finitop {

enum class ErrorCode {
    MissingEmpty,
    MissingFull,
    NotClosedUnderUnion,
    NotClosedUnderIntersection,
    PointOutOfRange,
    TooManyPoints,
    DimensionMismatch,
    FingerprintMismatch,
    UnknownTheorem,
    CapExceeded,
    Malformed,
};

const char* error_code_name(ErrorCode code);

/// Every recoverable failure of the library. Axiom violations carry the
/// offending pair of sets.
class TopologyError : public std::runtime_error {
public:
    TopologyError(ErrorCode code, const std::string& message,
                  std::optional<Mask> first = std::nullopt, std::optional<Mask> second = std::nullopt);

    ErrorCode code() const { return code_; }
    std::optional<Mask> first() const { return first_; }
    std::optional<Mask> second() const { return second_; }

private:
    ErrorCode code_;
    std::optional<Mask> first_;
    std::optional<Mask> second_;
};

}  // namespace finitop
