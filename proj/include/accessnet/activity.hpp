#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "accessnet/timeutil.hpp"

namespace accessnet {

// Interface-activity analytics: ingest up/down time series, classify users
// into Knight (offline all night) and Office (Knight plus regular daytime
// presence), aggregate per switch and building, and summarize ping failures.

struct ActivitySample {
    std::int64_t timestamp = 0;  // epoch seconds, declared-timezone wall clock
    std::string switch_id;
    std::string interface_id;
    bool up = false;
};

struct ActivityLog {
    std::vector<ActivitySample> samples;  // sorted by (timestamp, switch, interface)
    std::string timezone;                 // from an optional "# timezone:" comment
    std::size_t total_rows = 0;
    std::size_t malformed_rows = 0;
    std::vector<std::size_t> malformed_lines;  // 1-based, first few only
};

// CSV with header `timestamp,switch_id,interface_id,up`, ISO-8601 timestamps,
// up in {0,1}. Duplicate (switch, interface, timestamp) rows collapse by OR of
// up. Malformed rows are tolerated and counted unless they exceed one percent
// of the rows (a single bad row never fails); beyond that a ParseError with
// the offending line numbers is raised.
ActivityLog parse_activity_log(std::istream& in);

struct ClassifierConfig {
    // Half-open window [start, end) in minutes of day; start > end crosses
    // midnight. A night belongs to the calendar day on which it starts.
    int night_start_min = 21 * 60;
    int night_end_min = 9 * 60;
    int min_knight_days = 3;
    double office_working_day_fraction = 0.5;
    std::set<int> working_days = {0, 1, 2, 3, 4};  // Mon..Fri
    int users_per_switch = 12;

    bool in_night(int seconds_of_day) const {
        const int start = night_start_min * 60, end = night_end_min * 60;
        if (start > end) return seconds_of_day >= start || seconds_of_day < end;
        return seconds_of_day >= start && seconds_of_day < end;
    }
};

// JSON config: {"night_window": ["21:00","09:00"], "min_knight_days": 3,
// "office_working_day_fraction": 0.5, "users_per_switch": 12,
// "working_days": ["Mon",...]}. All fields optional.
ClassifierConfig load_classifier_config(std::istream& in);
ClassifierConfig load_classifier_config_file(const std::string& path);

struct InterfaceKey {
    std::string switch_id;
    std::string interface_id;

    friend auto operator<=>(const InterfaceKey&, const InterfaceKey&) = default;
};

struct ClassCounts {
    int knight = 0;
    int office = 0;
};

struct DayPoint {
    std::int64_t date_days = 0;  // the calendar day the night started on
    double knight_pct = 0;       // of all interfaces active at least once
};

struct ClassificationResult {
    std::set<InterfaceKey> knight_users;
    std::set<InterfaceKey> office_users;  // always a subset of knight_users
    std::vector<DayPoint> per_day_knight_pct;
    std::map<std::string, ClassCounts> per_switch_counts;
    std::size_t active_interfaces = 0;
    std::int64_t first_date_days = 0;
    std::int64_t last_date_days = 0;
};

// Knight: interface seen up at least once overall, and on at least
// min_knight_days nights every sample inside the night window was down (a
// night with no in-window sample is unobserved and counts for nothing).
// Office: Knight, plus up at least once during day hours on at least the
// configured fraction of the working days in range. Throws Error("empty_log").
ClassificationResult classify_users(const ActivityLog& log, const ClassifierConfig& cfg);

// Sums per-switch counts over a switch -> building mapping. Unknown switch ids
// raise Error("unknown_switch").
std::map<std::string, ClassCounts> per_building_counts(
    const ClassificationResult& result, const std::map<std::string, std::string>& switch_building);

struct AoEstimate {
    std::map<std::string, ClassCounts> per_building;  // ceil(count / users_per_switch)
    int office_based_total = 0;
    int knight_based_total = 0;
};

// Converts per-building user counts into switch counts, one switch per
// users_per_switch users, rounded up.
AoEstimate estimate_ao_switches(const std::map<std::string, ClassCounts>& building_counts,
                                int users_per_switch);

struct PingSample {
    std::int64_t timestamp = 0;
    std::string switch_id;
    bool reachable = false;
};

struct PingLog {
    std::vector<PingSample> samples;
    std::size_t total_rows = 0;
    std::size_t malformed_rows = 0;
    std::vector<std::size_t> malformed_lines;
};

// CSV with header `timestamp,switch_id,reachable`; same tolerance rules as
// parse_activity_log.
PingLog parse_ping_log(std::istream& in);

struct PingHourCount {
    std::int64_t hour_start = 0;  // epoch seconds, on the hour
    int exactly_once_missed = 0;
    int more_than_once_missed = 0;
};

struct PingReport {
    std::vector<PingHourCount> hours;  // every observed hour, sorted
};

// Per calendar hour: how many switches failed to answer exactly once, and how
// many failed more than once.
PingReport ping_report(const std::vector<PingSample>& samples);

}  // namespace accessnet
