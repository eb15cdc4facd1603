#include "car/errors.hpp"

namespace car {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::CsvFormat: return "CsvFormat";
    case Errc::NewsFormat: return "NewsFormat";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::MissingTimezone: return "MissingTimezone";
    case Errc::EmptyText: return "EmptyText";
    case Errc::OutOfOrder: return "OutOfOrder";
    case Errc::NonPositiveClose: return "NonPositiveClose";
    case Errc::BadDate: return "BadDate";
    case Errc::BadTimestamp: return "BadTimestamp";
    case Errc::HorizonExceeded: return "HorizonExceeded";
    case Errc::InvalidStep: return "InvalidStep";
    case Errc::NoScoreFound: return "NoScoreFound";
    case Errc::ScoreOutOfRange: return "ScoreOutOfRange";
    case Errc::OffGridScore: return "OffGridScore";
    case Errc::NoCategoryFound: return "NoCategoryFound";
    case Errc::AmbiguousCategory: return "AmbiguousCategory";
    case Errc::Transport: return "Transport";
    case Errc::RateLimited: return "RateLimited";
    case Errc::EmptyResponse: return "EmptyResponse";
    case Errc::StubNoMatch: return "StubNoMatch";
    case Errc::InsufficientHistory: return "InsufficientHistory";
    case Errc::EmptyOverlap: return "EmptyOverlap";
    case Errc::ActionOffCalendar: return "ActionOffCalendar";
    case Errc::PositionViolation: return "PositionViolation";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

} // namespace car
