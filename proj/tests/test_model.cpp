#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "accessnet/errors.hpp"
#include "accessnet/model.hpp"
#include "accessnet/money.hpp"
#include "accessnet/timeutil.hpp"
#include "accessnet/topology_io.hpp"
#include "testutil.hpp"

using namespace accessnet;
using accessnet::testing::InstanceBuilder;
using accessnet::testing::tiny_instance;

TEST_CASE("money parses and formats exactly") {
    CHECK(*money_from_string("1212.80") == 121280);
    CHECK(*money_from_string("15") == 1500);
    CHECK(*money_from_string("50.8") == 5080);
    CHECK(*money_from_string("-3.5") == -350);
    CHECK(*money_from_string("0") == 0);
    CHECK(!money_from_string("1.234"));
    CHECK(!money_from_string("abc"));
    CHECK(!money_from_string("12."));
    CHECK(!money_from_string(""));

    CHECK(money_from_major(15.0) == 1500);
    CHECK(money_from_major(1065.60) == 106560);
    CHECK(money_to_string(121280) == "1212.80");
    CHECK(money_to_string(-350) == "-3.50");
    CHECK(money_to_major(4500) == doctest::Approx(45.0));
}

TEST_CASE("civil time round-trips and knows its weekdays") {
    CHECK(days_from_civil(1970, 1, 1) == 0);
    CHECK(weekday_from_days(0) == 3);                              // Thursday
    CHECK(weekday_from_days(days_from_civil(2014, 5, 18)) == 6);   // Sunday
    CHECK(weekday_from_days(days_from_civil(2014, 5, 19)) == 0);   // Monday
    CHECK(*weekday_from_name("Mon") == 0);
    CHECK(!weekday_from_name("Funday"));

    auto ts = parse_iso8601("2014-05-18T21:00:00");
    REQUIRE(ts);
    CHECK(format_datetime(*ts) == "2014-05-18T21:00:00");
    CHECK(*parse_iso8601("2014-05-18 21:00:00") == *ts);
    CHECK(*parse_iso8601("2014-05-18T21:00:00Z") == *ts);
    CHECK(!parse_iso8601("2014-13-01T00:00:00"));
    CHECK(!parse_iso8601("2014-02-30T00:00:00"));
    CHECK(!parse_iso8601("yesterday"));

    CHECK(*parse_time_of_day("21:00") == 21 * 60);
    CHECK(*parse_time_of_day("09:30") == 9 * 60 + 30);
    CHECK(!parse_time_of_day("24:00"));
    CHECK(!parse_time_of_day("9:00"));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::int64_t days = std::uniform_int_distribution<std::int64_t>(-200'000, 200'000)(rng);
        int y, m, d;
        civil_from_days(days, y, m, d);
        CHECK(days_from_civil(y, m, d) == days);
    }
}

TEST_CASE("well-formed instance validates cleanly, twice") {
    NetworkInstance inst = tiny_instance();
    ValidationReport first = validate_instance(inst);
    CHECK(first.ok());
    CHECK(first.violations.empty());
    ValidationReport second = validate_instance(inst);
    CHECK(second.violations.size() == first.violations.size());
    CHECK(second.warnings.size() == first.warnings.size());
}

TEST_CASE("office user with only always-on candidates is flagged") {
    NetworkInstance inst = InstanceBuilder()
                               .user("u1", "B1", Profile::office)
                               .access("a1", "B1", Profile::always_on, 1000, 4)
                               .dist("d1", "B1", 2000, 4)
                               .core(0)
                               .ua("u1", "a1", 500)
                               .ad("a1", "d1", 500)
                               .dc("d1", 500)
                               .build();
    ValidationReport report = validate_instance(inst);
    REQUIRE(!report.ok());
    bool found = false;
    for (const auto& v : report.violations) {
        found |= v.code == "no_same_profile_candidate" && v.subject == "u1";
    }
    CHECK(found);
}

TEST_CASE("office ports short of office users is flagged by the counting pass") {
    InstanceBuilder b;
    b.access("a1", "B1", Profile::office, 1000, 1)
        .dist("d1", "B1", 2000, 4)
        .core(0)
        .ad("a1", "d1", 500)
        .dc("d1", 500);
    for (const std::string& id : {"u1", "u2"}) {
        b.user(id, "B1", Profile::office).ua(id, "a1", 500);
    }
    ValidationReport report = validate_instance(b.build());
    bool found = false;
    for (const auto& v : report.violations) {
        found |= v.code == "insufficient_profile_capacity" && v.subject == "office";
    }
    CHECK(found);
}

TEST_CASE("bad quantities and broken references are all reported") {
    NetworkInstance inst = tiny_instance();
    inst.users.push_back({"u1", "B1", Profile::office});  // duplicate id
    inst.access_switches[0].max_users = 0;
    inst.user_access_links[{"u1", "a1"}].length_m = -4;
    inst.user_access_links[{"ghost", "a1"}] = {100, 1, 100e6, Medium::copper};
    inst.access_dist_links[{"a1", "d1"}].capacity_bps = 0;
    inst.dist_core_links.erase("d1");

    ValidationReport report = validate_instance(inst);
    auto has = [&](const char* code) {
        for (const auto& v : report.violations) {
            if (v.code == code) return true;
        }
        return false;
    };
    CHECK(has("duplicate_id"));
    CHECK(has("nonpositive_ports"));
    CHECK(has("negative_length"));
    CHECK(has("unknown_endpoint"));
    CHECK(has("nonpositive_capacity"));
    CHECK(has("missing_core_uplink"));
}

TEST_CASE("outdoor switch site is a warning, not a violation") {
    NetworkInstance inst = tiny_instance();
    inst.access_switches[0].indoor = false;
    ValidationReport report = validate_instance(inst);
    CHECK(report.ok());
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].code == "outdoor_site");
}

TEST_CASE("link cost from length") {
    CableRateTable rates = CableRateTable::bundled_default();
    CHECK(link_cost_from_length(0, Medium::copper, rates) == 0);
    // 14280 m of copper at 15.00/m
    CHECK(link_cost_from_length(14'280, Medium::copper, rates) == 21'420'000);
    CHECK(link_cost_from_length(30, Medium::copper, rates) == 45'000);
    CHECK_THROWS_WITH_AS(link_cost_from_length(10, Medium::fiber, rates),
                         doctest::Contains("fiber"), Error);

    // Linearity over integer lengths.
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        double a = std::uniform_int_distribution<int>(0, 100'000)(rng);
        double b = std::uniform_int_distribution<int>(0, 100'000)(rng);
        CHECK(link_cost_from_length(a + b, Medium::copper, rates) ==
              link_cost_from_length(a, Medium::copper, rates) +
                  link_cost_from_length(b, Medium::copper, rates));
    }
}

TEST_CASE("topology JSON round-trips") {
    NetworkInstance inst = tiny_instance();
    inst.rates.per_meter[Medium::fiber] = 9000;
    std::stringstream buffer;
    save_topology(inst, buffer);
    NetworkInstance loaded = load_topology(buffer);
    CHECK(loaded == inst);
}

TEST_CASE("topology loader synthesizes missing costs from lengths") {
    std::stringstream in(R"({
      "users": [{"id":"u1","building":"B1","profile":"office"}],
      "access_switches": [{"id":"a1","building":"B1","profile":"office",
                           "cost":10,"power_w":50,"max_users":24}],
      "distribution_switches": [{"id":"d1","building":"B1","cost":20,"power_w":80,"max_access":8}],
      "core": {"cost":0,"power_w":100},
      "rates": {"copper": 15, "fiber": 90},
      "links": [
        {"from":"u1","to":"a1","length_m":30},
        {"from":"a1","to":"d1","length_m":10},
        {"from":"d1","to":"core","length_m":100}
      ]
    })");
    NetworkInstance inst = load_topology(in);
    CHECK(inst.user_access_links.at({"u1", "a1"}).cost == 45'000);  // 30 m copper
    CHECK(inst.user_access_links.at({"u1", "a1"}).capacity_bps == doctest::Approx(100e6));
    CHECK(inst.access_dist_links.at({"a1", "d1"}).medium == Medium::copper);
    CHECK(inst.dist_core_links.at("d1").medium == Medium::fiber);
    CHECK(inst.dist_core_links.at("d1").cost == 900'000);  // 100 m fiber at 90/m
}

TEST_CASE("topology loader rejects malformed documents") {
    auto load = [](const char* text) {
        std::stringstream in(text);
        return load_topology(in);
    };
    CHECK_THROWS_AS(load("not json"), ParseError);
    CHECK_THROWS_AS(load("{}"), ParseError);
    CHECK_THROWS_AS(load(R"({"users":[{"id":"u1","building":"B1","profile":"nocturnal"}],
        "access_switches":[],"distribution_switches":[],"core":{"cost":0,"power_w":0},
        "links":[]})"),
                    ParseError);
    // Link endpoint that matches nothing.
    CHECK_THROWS_AS(load(R"({"users":[],"access_switches":[],"distribution_switches":[],
        "core":{"cost":0,"power_w":0},
        "links":[{"from":"nowhere","to":"a1","cost":1}]})"),
                    ParseError);
}
