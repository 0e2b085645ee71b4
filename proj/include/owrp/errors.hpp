#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace owrp {

enum class ErrorCode {
    NotClosedOrTooSmall,
    NotOrthogonal,
    NotSimple,
    ZeroLengthEdge,
    UnsupportedClass,
    PointOutside,
    RouteOutside,
    TooLarge,
    BudgetExceeded,
    GenerationFailed,
    MalformedJson,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// index: offending vertex/element index when known, -1 otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, int64_t index = -1)
        : std::runtime_error(std::move(message)), code_(code), index_(index) {}

    ErrorCode code() const { return code_; }
    int64_t index() const { return index_; }

private:
    ErrorCode code_;
    int64_t index_;
};

}  // namespace owrp
