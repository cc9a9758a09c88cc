#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace accessnet {

// All log files declare one timezone and there is no DST arithmetic, so
// timestamps reduce to naive wall-clock seconds since 1970-01-01 00:00:00.

struct CivilDateTime {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
    int hour = 0;
    int minute = 0;
    int second = 0;
};

std::int64_t days_from_civil(int year, int month, int day);
void civil_from_days(std::int64_t days, int& year, int& month, int& day);

std::int64_t to_epoch_seconds(const CivilDateTime& dt);
CivilDateTime from_epoch_seconds(std::int64_t seconds);

// 0 = Monday .. 6 = Sunday.
int weekday_from_days(std::int64_t days);
std::optional<int> weekday_from_name(std::string_view name);  // "Mon".."Sun"
const char* weekday_name(int weekday);

// "YYYY-MM-DD[T ]HH:MM:SS" with an optional trailing 'Z'.
std::optional<std::int64_t> parse_iso8601(std::string_view text);

// "HH:MM" -> minutes of day.
std::optional<int> parse_time_of_day(std::string_view text);

std::string format_date(std::int64_t days);
std::string format_datetime(std::int64_t seconds);
std::string format_time_of_day(int minutes);

}  // namespace accessnet
