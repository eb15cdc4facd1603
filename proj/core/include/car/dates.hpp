#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace car {

/// Calendar date, stored as days since 1970-01-01 (proleptic Gregorian).
struct Date {
    std::int32_t days = 0;

    auto operator<=>(const Date&) const = default;

    static Date from_ymd(int year, int month, int day);
    void to_ymd(int& year, int& month, int& day) const;

    /// Parses strict `YYYY-MM-DD`.
    static Date parse(const std::string& text);
    std::string to_string() const;
};

/// Instant with the timezone offset it was written in. Ordering compares
/// the UTC instant only; the offset is kept for round-tripping.
struct Timestamp {
    std::int64_t utc_seconds = 0;
    std::int32_t offset_minutes = 0;

    /// Parses RFC 3339 with a mandatory offset (`Z` or `±HH:MM`).
    /// Naive timestamps raise Errc::MissingTimezone. Fractional seconds
    /// are accepted and truncated.
    static Timestamp parse(const std::string& text);
    std::string to_string() const;

    std::int64_t local_seconds() const { return utc_seconds + std::int64_t{60} * offset_minutes; }

    bool operator==(const Timestamp& o) const { return utc_seconds == o.utc_seconds; }
    auto operator<=>(const Timestamp& o) const { return utc_seconds <=> o.utc_seconds; }
};

/// Time-of-day paired with the exchange's UTC offset, e.g. "15:30+08:00".
struct CutoffTime {
    std::int32_t minute_of_day = 15 * 60 + 30;
    std::int32_t offset_minutes = 8 * 60; // Shanghai

    static CutoffTime parse(const std::string& text);
    std::string to_string() const;

    bool operator==(const CutoffTime&) const = default;
};

/// Civil date of `ts` as seen from the zone given by `offset_minutes`,
/// plus the minute-of-day within that zone.
struct LocalStamp {
    Date date;
    std::int32_t minute_of_day = 0;
    std::int32_t second_of_minute = 0;
};
LocalStamp local_stamp(const Timestamp& ts, std::int32_t offset_minutes);

} // namespace car
