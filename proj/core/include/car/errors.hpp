#pragma once

#include <stdexcept>
#include <string>

namespace car {

/// Machine-checkable failure reasons. Every car::Error carries one.
enum class Errc {
    InvalidConfig,
    CsvFormat,
    NewsFormat,
    DuplicateId,
    MissingTimezone,
    EmptyText,
    OutOfOrder,
    NonPositiveClose,
    BadDate,
    BadTimestamp,
    HorizonExceeded,
    InvalidStep,
    NoScoreFound,
    ScoreOutOfRange,
    OffGridScore,
    NoCategoryFound,
    AmbiguousCategory,
    Transport,
    RateLimited,
    EmptyResponse,
    StubNoMatch,
    InsufficientHistory,
    EmptyOverlap,
    ActionOffCalendar,
    PositionViolation,
    EmptyGrid,
    Io,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace car
