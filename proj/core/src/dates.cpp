#include "car/dates.hpp"

#include "car/errors.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace car {

namespace {

// Howard Hinnant's civil-days algorithms, valid over the whole int32 range.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

bool all_digits(const std::string& s, std::size_t pos, std::size_t count) {
    if (pos + count > s.size()) return false;
    for (std::size_t i = pos; i < pos + count; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

int to_int(const std::string& s, std::size_t pos, std::size_t count) {
    int v = 0;
    for (std::size_t i = pos; i < pos + count; ++i) v = v * 10 + (s[i] - '0');
    return v;
}

bool valid_ymd(int y, int m, int d) {
    if (m < 1 || m > 12 || d < 1) return false;
    static constexpr int mdays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int dm = mdays[m - 1];
    if (m == 2 && ((y % 4 == 0 && y % 100 != 0) || y % 400 == 0)) dm = 29;
    return d <= dm;
}

} // namespace

Date Date::from_ymd(int year, int month, int day) {
    if (!valid_ymd(year, month, day))
        throw Error(Errc::BadDate, "invalid calendar date");
    return Date{static_cast<std::int32_t>(days_from_civil(year, month, day))};
}

void Date::to_ymd(int& year, int& month, int& day) const {
    civil_from_days(days, year, month, day);
}

Date Date::parse(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !all_digits(text, 0, 4) || !all_digits(text, 5, 2) || !all_digits(text, 8, 2))
        throw Error(Errc::BadDate, "expected YYYY-MM-DD, got '" + text + "'");
    return from_ymd(to_int(text, 0, 4), to_int(text, 5, 2), to_int(text, 8, 2));
}

std::string Date::to_string() const {
    int y, m, d;
    to_ymd(y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

Timestamp Timestamp::parse(const std::string& text) {
    // YYYY-MM-DD[T ]HH:MM:SS[.fff...](Z|±HH:MM)
    auto fail = [&](Errc code, const char* why) -> Timestamp {
        throw Error(code, std::string(why) + " in '" + text + "'");
    };
    if (text.size() < 19) fail(Errc::BadTimestamp, "timestamp too short");
    if (text[4] != '-' || text[7] != '-') fail(Errc::BadTimestamp, "malformed date part");
    if (text[10] != 'T' && text[10] != 't' && text[10] != ' ')
        fail(Errc::BadTimestamp, "missing date/time separator");
    if (text[13] != ':' || text[16] != ':') fail(Errc::BadTimestamp, "malformed time part");
    if (!all_digits(text, 0, 4) || !all_digits(text, 5, 2) || !all_digits(text, 8, 2) ||
        !all_digits(text, 11, 2) || !all_digits(text, 14, 2) || !all_digits(text, 17, 2))
        fail(Errc::BadTimestamp, "non-digit field");

    int y = to_int(text, 0, 4), mo = to_int(text, 5, 2), d = to_int(text, 8, 2);
    int hh = to_int(text, 11, 2), mi = to_int(text, 14, 2), ss = to_int(text, 17, 2);
    if (!valid_ymd(y, mo, d)) fail(Errc::BadTimestamp, "invalid calendar date");
    if (hh > 23 || mi > 59 || ss > 60) fail(Errc::BadTimestamp, "invalid time of day");
    if (ss == 60) ss = 59; // fold leap seconds

    std::size_t pos = 19;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) fail(Errc::BadTimestamp, "empty fractional seconds");
    }
    if (pos >= text.size())
        fail(Errc::MissingTimezone, "timestamp carries no UTC offset");

    std::int32_t offset = 0;
    char c = text[pos];
    if (c == 'Z' || c == 'z') {
        if (pos + 1 != text.size()) fail(Errc::BadTimestamp, "trailing characters");
    } else if (c == '+' || c == '-') {
        if (!all_digits(text, pos + 1, 2) || pos + 3 >= text.size() || text[pos + 3] != ':' ||
            !all_digits(text, pos + 4, 2) || pos + 6 != text.size())
            fail(Errc::BadTimestamp, "malformed offset, expected ±HH:MM");
        int oh = to_int(text, pos + 1, 2), om = to_int(text, pos + 4, 2);
        if (oh > 23 || om > 59) fail(Errc::BadTimestamp, "offset out of range");
        offset = oh * 60 + om;
        if (c == '-') offset = -offset;
    } else {
        fail(Errc::MissingTimezone, "timestamp carries no UTC offset");
    }

    std::int64_t local = days_from_civil(y, mo, d) * 86400 + hh * 3600 + mi * 60 + ss;
    return Timestamp{local - std::int64_t{60} * offset, offset};
}

std::string Timestamp::to_string() const {
    std::int64_t local = local_seconds();
    std::int64_t day = local >= 0 ? local / 86400 : (local - 86399) / 86400;
    int sod = static_cast<int>(local - day * 86400);
    int y, m, d;
    civil_from_days(day, y, m, d);
    int oh = std::abs(offset_minutes) / 60, om = std::abs(offset_minutes) % 60;
    char buf[40];
    if (offset_minutes == 0) {
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d, sod / 3600,
                      (sod / 60) % 60, sod % 60);
    } else {
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d%c%02d:%02d", y, m, d,
                      sod / 3600, (sod / 60) % 60, sod % 60, offset_minutes < 0 ? '-' : '+', oh,
                      om);
    }
    return buf;
}

CutoffTime CutoffTime::parse(const std::string& text) {
    // HH:MM followed by Z or ±HH:MM
    auto fail = [&](const char* why) -> CutoffTime {
        throw Error(Errc::BadTimestamp, std::string(why) + " in cutoff '" + text + "'");
    };
    if (text.size() < 6 || text[2] != ':' || !all_digits(text, 0, 2) || !all_digits(text, 3, 2))
        fail("expected HH:MM±HH:MM");
    int hh = to_int(text, 0, 2), mi = to_int(text, 3, 2);
    if (hh > 23 || mi > 59) fail("time of day out of range");

    std::int32_t offset = 0;
    char c = text[5];
    if (c == 'Z' || c == 'z') {
        if (text.size() != 6) fail("trailing characters");
    } else if (c == '+' || c == '-') {
        if (text.size() != 11 || !all_digits(text, 6, 2) || text[8] != ':' ||
            !all_digits(text, 9, 2))
            fail("malformed offset");
        int oh = to_int(text, 6, 2), om = to_int(text, 9, 2);
        if (oh > 23 || om > 59) fail("offset out of range");
        offset = oh * 60 + om;
        if (c == '-') offset = -offset;
    } else {
        fail("cutoff carries no UTC offset");
    }
    return CutoffTime{hh * 60 + mi, offset};
}

std::string CutoffTime::to_string() const {
    int oh = std::abs(offset_minutes) / 60, om = std::abs(offset_minutes) % 60;
    char buf[16];
    if (offset_minutes == 0) {
        std::snprintf(buf, sizeof(buf), "%02d:%02dZ", minute_of_day / 60, minute_of_day % 60);
    } else {
        std::snprintf(buf, sizeof(buf), "%02d:%02d%c%02d:%02d", minute_of_day / 60,
                      minute_of_day % 60, offset_minutes < 0 ? '-' : '+', oh, om);
    }
    return buf;
}

LocalStamp local_stamp(const Timestamp& ts, std::int32_t offset_minutes) {
    std::int64_t local = ts.utc_seconds + std::int64_t{60} * offset_minutes;
    std::int64_t day = local >= 0 ? local / 86400 : (local - 86399) / 86400;
    int sod = static_cast<int>(local - day * 86400);
    LocalStamp out;
    out.date = Date{static_cast<std::int32_t>(day)};
    out.minute_of_day = sod / 60;
    out.second_of_minute = sod % 60;
    return out;
}

} // namespace car
