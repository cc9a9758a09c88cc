#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "accessnet/activity.hpp"
#include "accessnet/errors.hpp"
#include "logutil.hpp"

using namespace accessnet;
using accessnet::testing::LogSpec;
using accessnet::testing::Pattern;
using accessnet::testing::make_log;
using accessnet::testing::make_random_log;

namespace {

ActivityLog parse(const std::string& text) {
    std::stringstream in(text);
    return parse_activity_log(in);
}

}  // namespace

TEST_CASE("empty file with a valid header parses to an empty log") {
    ActivityLog log = parse("timestamp,switch_id,interface_id,up\n");
    CHECK(log.samples.empty());
    CHECK(log.total_rows == 0);
    CHECK(log.malformed_rows == 0);
}

TEST_CASE("a single malformed row is tolerated and counted") {
    ActivityLog log = parse(
        "timestamp,switch_id,interface_id,up\n"
        "2014-05-18T10:00:00,s1,i1,1\n"
        "2014-05-18T10:20:00,s1,i1,up???\n"
        "2014-05-18T10:40:00,s1,i1,0\n"
        "2014-05-18T11:00:00,s1,i1,1\n");
    CHECK(log.samples.size() == 3);
    CHECK(log.malformed_rows == 1);
    REQUIRE(log.malformed_lines.size() == 1);
    CHECK(log.malformed_lines[0] == 3);
}

TEST_CASE("too many bad rows fail hard with line numbers") {
    std::string text = "timestamp,switch_id,interface_id,up\n";
    for (int i = 0; i < 300; ++i) {
        text += "2014-05-18T10:00:00,s" + std::to_string(i) + ",i1,1\n";
    }
    text += "garbage\nmore garbage\nworse\nstill bad\n";
    CHECK_THROWS_WITH_AS(parse(text), doctest::Contains("lines"), ParseError);
}

TEST_CASE("wrong header fails immediately") {
    CHECK_THROWS_AS(parse("time,switch,iface,state\n"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("timezone comment is captured") {
    ActivityLog log = parse(
        "# timezone: Asia/Kolkata\n"
        "timestamp,switch_id,interface_id,up\n"
        "2014-05-18T10:00:00,s1,i1,1\n");
    CHECK(log.timezone == "Asia/Kolkata");
}

TEST_CASE("duplicate samples collapse by OR of up") {
    ActivityLog log = parse(
        "timestamp,switch_id,interface_id,up\n"
        "2014-05-18T10:00:00,s1,i1,0\n"
        "2014-05-18T10:00:00,s1,i1,1\n"
        "2014-05-18T10:00:00,s1,i2,0\n"
        "2014-05-18T10:00:00,s1,i2,0\n");
    REQUIRE(log.samples.size() == 2);
    CHECK(log.samples[0].interface_id == "i1");
    CHECK(log.samples[0].up);
    CHECK(!log.samples[1].up);
}

TEST_CASE("textbook patterns classify as expected") {
    LogSpec spec;
    spec.days = 14;  // two full weeks: 10 working days
    spec.interfaces = {Pattern::office_like, Pattern::always_on, Pattern::night_owl};
    ActivityLog log = make_log(spec, 1);
    ClassifierConfig cfg;  // 21:00-09:00, 3 nights, half the working days

    ClassificationResult result = classify_users(log, cfg);
    CHECK(result.knight_users.size() == 1);
    CHECK(result.office_users.size() == 1);
    CHECK(result.knight_users.begin()->interface_id == "i1");
    CHECK(result.office_users.begin()->interface_id == "i1");
    CHECK(result.active_interfaces == 3);
    CHECK(result.per_switch_counts.at("s1").knight == 1);
    CHECK(result.per_switch_counts.at("s1").office == 1);

    // The series covers every observed night and never exceeds 100%.
    CHECK(!result.per_day_knight_pct.empty());
    for (const auto& point : result.per_day_knight_pct) {
        CHECK(point.knight_pct >= 0);
        CHECK(point.knight_pct <= 100);
    }
}

TEST_CASE("one nocturnal blip forfeits that night only") {
    LogSpec spec;
    spec.days = 6;
    spec.interfaces = {Pattern::office_like};
    ActivityLog log = make_log(spec, 1);
    // Up at 02:00 on the second calendar day: that sample belongs to the
    // night that started on day one.
    const std::int64_t blip = (spec.start_day + 1) * 86400 + 2 * 3600;
    for (auto& sample : log.samples) {
        if (sample.timestamp == blip) sample.up = true;
    }

    // Six days of hourly samples observe seven nights (both edge nights are
    // partial); the blip forfeits one, leaving six compliant.
    ClassifierConfig cfg;
    ClassificationResult result = classify_users(log, cfg);
    CHECK(result.knight_users.size() == 1);

    ClassifierConfig strict = cfg;
    strict.min_knight_days = 6;
    CHECK(classify_users(log, strict).knight_users.size() == 1);
    strict.min_knight_days = 7;
    CHECK(classify_users(log, strict).knight_users.empty());
}

TEST_CASE("an interface that is never up is not a user") {
    LogSpec spec;
    spec.interfaces = {Pattern::dead, Pattern::office_like};
    ActivityLog log = make_log(spec, 1);
    ClassificationResult result = classify_users(log, ClassifierConfig{});
    CHECK(result.active_interfaces == 1);
    for (const auto& key : result.knight_users) CHECK(key.interface_id != "i1");
}

TEST_CASE("weekends do not count against office users") {
    // Office-like pattern is down on weekends by construction; a 14-day range
    // holds 10 working days and the interface hits all 10.
    LogSpec spec;
    spec.days = 14;
    spec.interfaces = {Pattern::office_like};
    ActivityLog log = make_log(spec, 1);

    ClassifierConfig cfg;
    cfg.office_working_day_fraction = 1.0;  // demand every single working day
    ClassificationResult result = classify_users(log, cfg);
    CHECK(result.office_users.size() == 1);

    // Counting weekends as working days must disqualify it.
    ClassifierConfig all_days = cfg;
    all_days.working_days = {0, 1, 2, 3, 4, 5, 6};
    CHECK(classify_users(log, all_days).office_users.empty());
}

TEST_CASE("empty log is an error") {
    ActivityLog log;
    CHECK_THROWS_WITH_AS(classify_users(log, ClassifierConfig{}), doctest::Contains("no samples"),
                         Error);
}

TEST_CASE("classifier properties hold on random logs") {
    ClassifierConfig wide;  // 21:00-09:00
    ClassifierConfig narrow = wide;
    narrow.night_start_min = 23 * 60;
    narrow.night_end_min = 8 * 60;
    ClassifierConfig strict = wide;
    strict.min_knight_days = wide.min_knight_days + 2;

    std::mt19937_64 shuffle_rng(99);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        ActivityLog log = make_random_log(seed);
        ClassificationResult base = classify_users(log, wide);

        // Office is always contained in Knight.
        for (const auto& key : base.office_users) CHECK(base.knight_users.count(key) == 1);

        // Shrinking the night window can only admit more Knights.
        ClassificationResult narrowed = classify_users(log, narrow);
        for (const auto& key : base.knight_users) CHECK(narrowed.knight_users.count(key) == 1);

        // Raising the night count can only remove Knights.
        ClassificationResult stricter = classify_users(log, strict);
        for (const auto& key : stricter.knight_users) CHECK(base.knight_users.count(key) == 1);

        // Row order is irrelevant.
        ActivityLog shuffled = log;
        std::shuffle(shuffled.samples.begin(), shuffled.samples.end(), shuffle_rng);
        ClassificationResult reshuffled = classify_users(shuffled, wide);
        CHECK(reshuffled.knight_users == base.knight_users);
        CHECK(reshuffled.office_users == base.office_users);
    }
}

TEST_CASE("per-building counts add up and reject unknown switches") {
    ClassificationResult result;
    result.per_switch_counts["s1"] = {3, 2};
    result.per_switch_counts["s2"] = {4, 1};
    result.per_switch_counts["s3"] = {1, 1};

    std::map<std::string, std::string> mapping{{"s1", "B1"}, {"s2", "B1"}, {"s3", "B2"}};
    auto buildings = per_building_counts(result, mapping);
    CHECK(buildings.at("B1").knight == 7);
    CHECK(buildings.at("B1").office == 3);
    CHECK(buildings.at("B2").knight == 1);

    int knight_total = 0, switch_total = 0;
    for (const auto& [b, counts] : buildings) knight_total += counts.knight;
    for (const auto& [s, counts] : result.per_switch_counts) switch_total += counts.knight;
    CHECK(knight_total == switch_total);

    std::map<std::string, std::string> partial{{"s1", "B1"}};
    CHECK_THROWS_WITH_AS(per_building_counts(result, partial), doctest::Contains("s2"), Error);
}

TEST_CASE("switch estimate uses ceiling division") {
    std::map<std::string, ClassCounts> buildings;
    buildings["B1"] = {13, 0};   // 13 knights, no office users
    buildings["B2"] = {24, 12};
    buildings["B3"] = {0, 0};
    AoEstimate estimate = estimate_ao_switches(buildings, 12);
    CHECK(estimate.per_building.at("B1").knight == 2);
    CHECK(estimate.per_building.at("B1").office == 0);
    CHECK(estimate.per_building.at("B2").knight == 2);
    CHECK(estimate.per_building.at("B2").office == 1);
    CHECK(estimate.per_building.at("B3").knight == 0);
    CHECK(estimate.knight_based_total == 4);
    CHECK(estimate.office_based_total == 1);
}

TEST_CASE("ping report separates one miss from repeated misses") {
    std::vector<PingSample> samples;
    const std::int64_t hour = days_from_civil(2014, 6, 2) * 86400 + 10 * 3600;
    for (int i = 0; i < 3; ++i) {
        samples.push_back({hour + i * 1200, "A", i != 1});   // one miss
        samples.push_back({hour + i * 1200, "B", i == 0});   // two misses
        samples.push_back({hour + i * 1200, "C", true});     // clean
    }
    PingReport report = ping_report(samples);
    REQUIRE(report.hours.size() == 1);
    CHECK(report.hours[0].hour_start == hour);
    CHECK(report.hours[0].exactly_once_missed == 1);
    CHECK(report.hours[0].more_than_once_missed == 1);
}

TEST_CASE("an all-reachable hour still shows up, with zero counts") {
    std::vector<PingSample> samples;
    const std::int64_t hour = days_from_civil(2014, 6, 2) * 86400;
    for (int i = 0; i < 3; ++i) samples.push_back({hour + i * 1200, "A", true});
    PingReport report = ping_report(samples);
    REQUIRE(report.hours.size() == 1);
    CHECK(report.hours[0].exactly_once_missed == 0);
    CHECK(report.hours[0].more_than_once_missed == 0);
}

TEST_CASE("hourly miss counts never exceed the switches observed") {
    std::mt19937_64 rng(4);
    std::vector<PingSample> samples;
    const std::int64_t base = days_from_civil(2014, 6, 2) * 86400;
    for (int hour = 0; hour < 48; ++hour) {
        for (int s = 0; s < 5; ++s) {
            for (int i = 0; i < 3; ++i) {
                samples.push_back({base + hour * 3600 + i * 1200, "s" + std::to_string(s),
                                   rng() % 3 != 0});
            }
        }
    }
    PingReport report = ping_report(samples);
    CHECK(report.hours.size() == 48);
    for (const auto& h : report.hours) {
        CHECK(h.exactly_once_missed + h.more_than_once_missed <= 5);
    }
}

TEST_CASE("classifier config loads and validates") {
    std::stringstream in(R"({
      "night_window": ["23:00", "08:00"],
      "min_knight_days": 4,
      "office_working_day_fraction": 0.75,
      "users_per_switch": 10,
      "working_days": ["Mon", "Tue", "Wed"]
    })");
    ClassifierConfig cfg = load_classifier_config(in);
    CHECK(cfg.night_start_min == 23 * 60);
    CHECK(cfg.night_end_min == 8 * 60);
    CHECK(cfg.min_knight_days == 4);
    CHECK(cfg.office_working_day_fraction == doctest::Approx(0.75));
    CHECK(cfg.users_per_switch == 10);
    CHECK(cfg.working_days == std::set<int>{0, 1, 2});

    auto reject = [](const char* text) {
        std::stringstream bad(text);
        CHECK_THROWS_AS(load_classifier_config(bad), ParseError);
    };
    reject(R"({"night_window": ["21:00", "21:00"]})");
    reject(R"({"office_working_day_fraction": 0})");
    reject(R"({"office_working_day_fraction": 1.5})");
    reject(R"({"min_knight_days": 0})");
    reject(R"({"working_days": ["Caturday"]})");
    reject("not json");
}

TEST_CASE("ping log parses the declared format") {
    std::stringstream in(
        "timestamp,switch_id,reachable\n"
        "2014-05-18T10:00:00,s1,1\n"
        "2014-05-18T10:20:00,s1,0\n"
        "bogus row\n");
    PingLog log = parse_ping_log(in);
    CHECK(log.samples.size() == 2);
    CHECK(log.malformed_rows == 1);
    CHECK(!log.samples[1].reachable);
}
