#pragma once

// Synthetic activity logs for classifier tests. Samples run on a fixed
// 30-minute cadence for every interface, mirroring how the collection scripts
// poll switches, so every night window is observed for every interface.

#include <random>
#include <string>
#include <vector>

#include "accessnet/activity.hpp"
#include "accessnet/timeutil.hpp"

namespace accessnet::testing {

enum class Pattern { office_like, always_on, night_owl, coin_flip, dead };

struct LogSpec {
    std::int64_t start_day = days_from_civil(2014, 6, 2);  // a Monday
    int days = 10;
    int cadence_min = 30;
    std::vector<Pattern> interfaces;
};

inline ActivityLog make_log(const LogSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ActivityLog log;
    for (std::size_t i = 0; i < spec.interfaces.size(); ++i) {
        const std::string switch_id = "s" + std::to_string(1 + i / 3);
        const std::string interface_id = "i" + std::to_string(i + 1);
        for (int day = 0; day < spec.days; ++day) {
            for (int minute = 0; minute < 24 * 60; minute += spec.cadence_min) {
                const std::int64_t ts = (spec.start_day + day) * 86400 + minute * 60;
                const int hour = minute / 60;
                const int weekday = weekday_from_days(spec.start_day + day);
                bool up = false;
                switch (spec.interfaces[i]) {
                    case Pattern::office_like:
                        up = weekday < 5 && hour >= 10 && hour < 18;
                        break;
                    case Pattern::always_on:
                        up = true;
                        break;
                    case Pattern::night_owl:
                        up = hour >= 22 || hour < 3;
                        break;
                    case Pattern::coin_flip:
                        up = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
                        break;
                    case Pattern::dead:
                        up = false;
                        break;
                }
                log.samples.push_back({ts, switch_id, interface_id, up});
            }
        }
    }
    log.total_rows = log.samples.size();
    return log;
}

inline ActivityLog make_random_log(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    LogSpec spec;
    spec.days = 5 + static_cast<int>(rng() % 6);
    const int interfaces = 3 + static_cast<int>(rng() % 6);
    for (int i = 0; i < interfaces; ++i) {
        spec.interfaces.push_back(static_cast<Pattern>(rng() % 5));
    }
    return make_log(spec, seed);
}

}  // namespace accessnet::testing
