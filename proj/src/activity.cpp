#include "accessnet/activity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "accessnet/errors.hpp"

namespace accessnet {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxReportedBadLines = 20;

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

// Shared CSV walk: skips leading '#' comments (capturing "# timezone:"),
// demands the exact header, hands each data row to the row callback, and
// enforces the bad-row budget of max(1, rows/100).
template <typename RowFn>
void walk_csv(std::istream& in, const char* expected_header, std::string* timezone,
              std::size_t& total_rows, std::size_t& malformed_rows,
              std::vector<std::size_t>& malformed_lines, RowFn&& on_row) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<std::size_t> all_bad;

    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (!header_seen) {
            if (!line.empty() && line[0] == '#') {
                constexpr std::string_view tz_tag = "# timezone:";
                if (timezone && line.rfind(tz_tag, 0) == 0) {
                    std::string value = line.substr(tz_tag.size());
                    std::size_t first = value.find_first_not_of(' ');
                    *timezone = first == std::string::npos ? "" : value.substr(first);
                }
                continue;
            }
            if (line != expected_header) {
                throw ParseError("malformed_header", "expected header '" +
                                                         std::string(expected_header) +
                                                         "', got '" + line + "'");
            }
            header_seen = true;
            continue;
        }
        if (line.empty()) continue;
        ++total_rows;
        if (!on_row(line)) {
            ++malformed_rows;
            all_bad.push_back(line_no);
        }
    }
    if (!header_seen) {
        throw ParseError("malformed_header", "input ended before a header line");
    }

    malformed_lines.assign(all_bad.begin(),
                           all_bad.begin() + std::min(all_bad.size(), kMaxReportedBadLines));
    if (malformed_rows > std::max<std::size_t>(1, total_rows / 100)) {
        std::string lines;
        for (std::size_t i = 0; i < malformed_lines.size(); ++i) {
            lines += (i ? ", " : "") + std::to_string(malformed_lines[i]);
        }
        if (all_bad.size() > malformed_lines.size()) lines += ", ...";
        throw ParseError("too_many_bad_rows",
                         std::to_string(malformed_rows) + " of " + std::to_string(total_rows) +
                             " rows are malformed (lines " + lines + ")");
    }
}

}  // namespace

ActivityLog parse_activity_log(std::istream& in) {
    ActivityLog log;
    walk_csv(in, "timestamp,switch_id,interface_id,up", &log.timezone, log.total_rows,
             log.malformed_rows, log.malformed_lines, [&](const std::string& line) {
                 auto fields = split_csv(line);
                 if (fields.size() != 4) return false;
                 auto ts = parse_iso8601(fields[0]);
                 if (!ts || fields[1].empty() || fields[2].empty()) return false;
                 if (fields[3] != "0" && fields[3] != "1") return false;
                 log.samples.push_back({*ts, fields[1], fields[2], fields[3] == "1"});
                 return true;
             });

    std::sort(log.samples.begin(), log.samples.end(),
              [](const ActivitySample& lhs, const ActivitySample& rhs) {
                  return std::tie(lhs.timestamp, lhs.switch_id, lhs.interface_id, rhs.up) <
                         std::tie(rhs.timestamp, rhs.switch_id, rhs.interface_id, lhs.up);
              });
    // Collapse duplicate (switch, interface, timestamp) rows by OR of `up`;
    // the sort above puts up=1 first within a duplicate group.
    auto last = std::unique(log.samples.begin(), log.samples.end(),
                            [](const ActivitySample& lhs, const ActivitySample& rhs) {
                                return lhs.timestamp == rhs.timestamp &&
                                       lhs.switch_id == rhs.switch_id &&
                                       lhs.interface_id == rhs.interface_id;
                            });
    log.samples.erase(last, log.samples.end());
    return log;
}

ClassifierConfig load_classifier_config(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("bad_config", std::string("not valid JSON: ") + e.what());
    }
    ClassifierConfig cfg;
    if (doc.contains("night_window")) {
        const json& window = doc["night_window"];
        if (!window.is_array() || window.size() != 2 || !window[0].is_string() ||
            !window[1].is_string()) {
            throw ParseError("bad_config", "night_window must be [\"HH:MM\", \"HH:MM\"]");
        }
        auto start = parse_time_of_day(window[0].get<std::string>());
        auto end = parse_time_of_day(window[1].get<std::string>());
        if (!start || !end) throw ParseError("bad_config", "night_window times must be HH:MM");
        cfg.night_start_min = *start;
        cfg.night_end_min = *end;
    }
    if (doc.contains("min_knight_days")) cfg.min_knight_days = doc["min_knight_days"].get<int>();
    if (doc.contains("office_working_day_fraction")) {
        cfg.office_working_day_fraction = doc["office_working_day_fraction"].get<double>();
    }
    if (doc.contains("users_per_switch")) cfg.users_per_switch = doc["users_per_switch"].get<int>();
    if (doc.contains("working_days")) {
        cfg.working_days.clear();
        for (const json& name : doc["working_days"]) {
            auto day = weekday_from_name(name.get<std::string>());
            if (!day) throw ParseError("bad_config", "working_days entries must be Mon..Sun");
            cfg.working_days.insert(*day);
        }
    }

    if (cfg.night_start_min == cfg.night_end_min) {
        throw ParseError("bad_config", "night window duration must be strictly between 0 and 24h");
    }
    if (cfg.min_knight_days < 1) throw ParseError("bad_config", "min_knight_days must be >= 1");
    if (cfg.office_working_day_fraction <= 0 || cfg.office_working_day_fraction > 1) {
        throw ParseError("bad_config", "office_working_day_fraction must be in (0, 1]");
    }
    if (cfg.users_per_switch < 1) throw ParseError("bad_config", "users_per_switch must be >= 1");
    return cfg;
}

ClassifierConfig load_classifier_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("missing_file", "cannot open config file: " + path);
    return load_classifier_config(in);
}

ClassificationResult classify_users(const ActivityLog& log, const ClassifierConfig& cfg) {
    if (log.samples.empty()) throw Error("empty_log", "activity log holds no samples");

    ClassificationResult result;
    result.first_date_days = log.samples.front().timestamp / 86400;
    result.last_date_days = result.first_date_days;
    for (const auto& sample : log.samples) {
        result.first_date_days = std::min(result.first_date_days, sample.timestamp / 86400);
        result.last_date_days = std::max(result.last_date_days, sample.timestamp / 86400);
    }

    struct NightState {
        bool any_up = false;
    };
    struct InterfaceState {
        bool active = false;
        std::map<std::int64_t, NightState> nights;  // keyed by owning calendar day
        std::set<std::int64_t> day_up;               // days with an up sample in day hours
    };
    std::map<InterfaceKey, InterfaceState> interfaces;

    const bool crosses_midnight = cfg.night_start_min > cfg.night_end_min;
    for (const auto& sample : log.samples) {
        InterfaceState& state = interfaces[{sample.switch_id, sample.interface_id}];
        state.active |= sample.up;
        const std::int64_t date = sample.timestamp / 86400;
        const int seconds_of_day = static_cast<int>(sample.timestamp % 86400);
        if (cfg.in_night(seconds_of_day)) {
            const std::int64_t night =
                crosses_midnight && seconds_of_day < cfg.night_end_min * 60 ? date - 1 : date;
            state.nights[night].any_up |= sample.up;
        } else if (sample.up) {
            state.day_up.insert(date);
        }
    }

    std::size_t working_day_count = 0;
    for (std::int64_t day = result.first_date_days; day <= result.last_date_days; ++day) {
        working_day_count += cfg.working_days.count(weekday_from_days(day)) > 0;
    }

    for (const auto& [key, state] : interfaces) {
        if (state.active) ++result.active_interfaces;
    }

    std::map<std::int64_t, int> knight_offline_per_night;
    for (const auto& [key, state] : interfaces) {
        if (!state.active) continue;  // an interface never up is not a user

        int compliant_nights = 0;
        for (const auto& [night, night_state] : state.nights) {
            compliant_nights += !night_state.any_up;
        }
        if (compliant_nights < cfg.min_knight_days) continue;

        result.knight_users.insert(key);
        result.per_switch_counts[key.switch_id].knight += 1;
        for (const auto& [night, night_state] : state.nights) {
            if (!night_state.any_up) knight_offline_per_night[night] += 1;
        }

        std::size_t office_days = 0;
        for (std::int64_t day : state.day_up) {
            office_days += cfg.working_days.count(weekday_from_days(day)) > 0;
        }
        const bool office =
            working_day_count > 0 && office_days >= 1 &&
            static_cast<double>(office_days) >=
                cfg.office_working_day_fraction * static_cast<double>(working_day_count) - 1e-9;
        if (office) {
            result.office_users.insert(key);
            result.per_switch_counts[key.switch_id].office += 1;
        }
    }

    // Nights where anybody was observed inside the window, as a series.
    std::set<std::int64_t> observed_nights;
    for (const auto& [key, state] : interfaces) {
        for (const auto& [night, night_state] : state.nights) observed_nights.insert(night);
    }
    for (std::int64_t night : observed_nights) {
        double pct = result.active_interfaces == 0
                         ? 0.0
                         : 100.0 * knight_offline_per_night[night] /
                               static_cast<double>(result.active_interfaces);
        result.per_day_knight_pct.push_back({night, pct});
    }

    return result;
}

std::map<std::string, ClassCounts> per_building_counts(
    const ClassificationResult& result,
    const std::map<std::string, std::string>& switch_building) {
    std::map<std::string, ClassCounts> buildings;
    for (const auto& [switch_id, counts] : result.per_switch_counts) {
        auto it = switch_building.find(switch_id);
        if (it == switch_building.end()) {
            throw Error("unknown_switch", "switch " + switch_id + " has no building mapping");
        }
        buildings[it->second].knight += counts.knight;
        buildings[it->second].office += counts.office;
    }
    return buildings;
}

AoEstimate estimate_ao_switches(const std::map<std::string, ClassCounts>& building_counts,
                                int users_per_switch) {
    if (users_per_switch < 1) throw Error("bad_argument", "users_per_switch must be >= 1");
    AoEstimate estimate;
    auto ceil_div = [users_per_switch](int users) {
        return (users + users_per_switch - 1) / users_per_switch;
    };
    for (const auto& [building, counts] : building_counts) {
        ClassCounts switches{ceil_div(counts.knight), ceil_div(counts.office)};
        estimate.knight_based_total += switches.knight;
        estimate.office_based_total += switches.office;
        estimate.per_building[building] = switches;
    }
    return estimate;
}

PingLog parse_ping_log(std::istream& in) {
    PingLog log;
    walk_csv(in, "timestamp,switch_id,reachable", nullptr, log.total_rows, log.malformed_rows,
             log.malformed_lines, [&](const std::string& line) {
                 auto fields = split_csv(line);
                 if (fields.size() != 3) return false;
                 auto ts = parse_iso8601(fields[0]);
                 if (!ts || fields[1].empty()) return false;
                 if (fields[2] != "0" && fields[2] != "1") return false;
                 log.samples.push_back({*ts, fields[1], fields[2] == "1"});
                 return true;
             });
    return log;
}

PingReport ping_report(const std::vector<PingSample>& samples) {
    std::map<std::pair<std::int64_t, std::string>, int> misses;
    std::set<std::int64_t> observed_hours;
    for (const auto& sample : samples) {
        const std::int64_t hour = sample.timestamp / 3600 * 3600;
        observed_hours.insert(hour);
        misses[{hour, sample.switch_id}] += sample.reachable ? 0 : 1;
    }

    PingReport report;
    for (std::int64_t hour : observed_hours) report.hours.push_back({hour, 0, 0});
    std::map<std::int64_t, PingHourCount*> by_hour;
    for (auto& entry : report.hours) by_hour[entry.hour_start] = &entry;
    for (const auto& [key, missed] : misses) {
        if (missed == 1) by_hour[key.first]->exactly_once_missed += 1;
        if (missed >= 2) by_hour[key.first]->more_than_once_missed += 1;
    }
    return report;
}

}  // namespace accessnet
