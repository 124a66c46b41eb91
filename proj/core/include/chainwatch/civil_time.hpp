#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace chainwatch {

// Broken-down UTC timestamp, seconds precision.
struct CivilTime {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
    int hour = 0;   // 0..23
    int minute = 0;
    int second = 0;
};

// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(int year, int month, int day);

CivilTime civil_from_unix(std::int64_t unix_seconds);
std::int64_t unix_from_civil(const CivilTime& c);

// 0 = Monday .. 6 = Sunday.
int weekday_from_unix(std::int64_t unix_seconds);

// Strict ISO-8601 UTC form `YYYY-MM-DDTHH:MM:SSZ`. Returns nullopt on any
// deviation (wrong separators, out-of-range fields, trailing junk).
std::optional<std::int64_t> parse_utc(const std::string& text);

std::string format_utc(std::int64_t unix_seconds);

}  // namespace chainwatch
