#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "accessnet/errors.hpp"
#include "accessnet/heuristic.hpp"
#include "accessnet/savings.hpp"
#include "testutil.hpp"

using namespace accessnet;
using accessnet::testing::InstanceBuilder;

namespace {

double round2(double value) { return std::round(value * 100.0) / 100.0; }

NetworkInstance power_instance() {
    return InstanceBuilder()
        .access("a1", "B1", Profile::office, 0, 4, 50)
        .access("a2", "B1", Profile::office, 0, 4, 50)
        .access("a3", "B1", Profile::always_on, 0, 4, 50)
        .dist("d1", "B1", 0, 4, 80)
        .dist("d2", "B1", 0, 4, 80)
        .core(0, 100)
        .build();
}

}  // namespace

TEST_CASE("network power is the plain sum of powered devices") {
    NetworkInstance inst = power_instance();
    CHECK(network_power(inst, {}, {}) == doctest::Approx(100));
    CHECK(network_power(inst, {"a1", "a2", "a3"}, {"d1", "d2"}) == doctest::Approx(410));
    // Switching one 50 W access switch off removes exactly 50 W.
    CHECK(network_power(inst, {"a1", "a2", "a3"}, {"d1", "d2"}) -
              network_power(inst, {"a1", "a2"}, {"d1", "d2"}) ==
          doctest::Approx(50));
    CHECK_THROWS_WITH_AS(network_power(inst, {"nope"}, {}), doctest::Contains("nope"), Error);
}

TEST_CASE("monthly savings percentages hit the published figures") {
    CHECK(round2(savings_percent({62, 846, 12, 22, 8})) == doctest::Approx(4.64));
    CHECK(round2(savings_percent({144, 846, 12, 22, 8})) == doctest::Approx(10.78));
    CHECK(round2(savings_percent({62, 406, 12, 22, 8})) == doctest::Approx(9.67));
    CHECK(round2(savings_percent({144, 406, 12, 22, 8})) == doctest::Approx(22.46));
    CHECK(savings_percent({0, 846, 12, 22, 8}) == doctest::Approx(0));
}

TEST_CASE("savings input invariants are enforced") {
    CHECK_THROWS_AS(savings_percent({62, 0, 12, 22, 8}), Error);
    CHECK_THROWS_AS(savings_percent({-1, 846, 12, 22, 8}), Error);
    CHECK_THROWS_AS(savings_percent({900, 846, 12, 22, 8}), Error);
    CHECK_THROWS_AS(savings_percent({62, 846, 12, 20, 8}), Error);  // 20 + 8 != 30
    CHECK_THROWS_AS(savings_percent({62, 846, 24, 22, 8}), Error);
    CHECK_THROWS_AS(savings_percent({62, 846, 0, 22, 8}), Error);
}

TEST_CASE("savings percent scales linearly and cancels joint doubling") {
    const double base = savings_percent({62, 846, 12, 22, 8});
    CHECK(savings_percent({124, 846, 12, 22, 8}) == doctest::Approx(2 * base));
    CHECK(savings_percent({124, 846 * 2, 12, 22, 8}) == doctest::Approx(base));
    // Bound: n_ao <= n_total caps the percentage at off-hours / month-hours.
    const double cap = 100.0 * (12 * 22 + 24 * 8) / 720.0;
    for (int n_ao : {0, 100, 400, 846}) {
        const double pct = savings_percent({n_ao, 846, 12, 22, 8});
        CHECK(pct >= 0);
        CHECK(pct <= cap + 1e-9);
    }
}

TEST_CASE("payback reproduces the wiring arithmetic") {
    PaybackReport report = payback(476, 30, 1500, 1'856'000);
    CHECK(report.extra_wire_m == doctest::Approx(14'280));
    CHECK(report.wire_cost == 21'420'000);
    CHECK(round2(report.payback_months) == doctest::Approx(11.54));

    PaybackReport zero = payback(0, 30, 1500, 1'856'000);
    CHECK(zero.extra_wire_m == doctest::Approx(0));
    CHECK(zero.wire_cost == 0);
    CHECK(zero.payback_months == doctest::Approx(0));

    // 100 users, 10 m, 20.00/m, 10000.00 saved monthly: two months.
    PaybackReport hand = payback(100, 10, 2000, 1'000'000);
    CHECK(hand.extra_wire_m == doctest::Approx(1000));
    CHECK(hand.wire_cost == 2'000'000);
    CHECK(round2(hand.payback_months) == doctest::Approx(2.00));

    CHECK_THROWS_WITH_AS(payback(476, 30, 1500, 0), doctest::Contains("positive"), Error);
    CHECK_THROWS_AS(payback(-1, 30, 1500, 100), Error);
}

TEST_CASE("payback scales with the rate and against the saving") {
    PaybackReport base = payback(100, 20, 1000, 500'000);
    PaybackReport doubled_rate = payback(100, 20, 2000, 500'000);
    PaybackReport doubled_saving = payback(100, 20, 1000, 1'000'000);
    CHECK(doubled_rate.payback_months == doctest::Approx(2 * base.payback_months));
    CHECK(doubled_saving.payback_months == doctest::Approx(base.payback_months / 2));
}

TEST_CASE("modeled monthly saving is labeled arithmetic, not magic") {
    // 62 switches, 58 W each, 456 h off in a month, 8.00 per kWh.
    Money modeled = estimate_monthly_saving(62, 58, 456, 800);
    CHECK(modeled == 1'311'821);  // 13118.21 after rounding to the paisa
    CHECK(estimate_monthly_saving(0, 58, 456, 800) == 0);
    CHECK_THROWS_AS(estimate_monthly_saving(-1, 58, 456, 800), Error);
}

TEST_CASE("catalog selection prefers the cheapest qualifying switch") {
    auto catalog = default_catalog();
    REQUIRE(catalog.size() == 4);

    SwitchCatalogEntry pick = select_switch(catalog, 47, 24);
    CHECK(pick.vendor == "HP");
    CHECK(pick.price24 == 106'560);  // $1065.60, beating the D-Link at $1529.99

    SwitchCatalogEntry hottest = select_switch(catalog, 55, 24);
    CHECK(hottest.vendor == "HP");

    CHECK_THROWS_WITH_AS(select_switch(catalog, 60, 24), doctest::Contains("60"), Error);
    CHECK_THROWS_AS(select_switch(catalog, 47, 12), Error);

    // 48-port pricing flips the comparison between vendors.
    SwitchCatalogEntry wide = select_switch(catalog, 0, 48);
    CHECK(wide.vendor == "HP");
    CHECK(wide.price48 == 187'385);
}

TEST_CASE("catalog ties break on power, then vendor") {
    std::vector<SwitchCatalogEntry> catalog{
        {"Zeta", "Z1", 40, 1000, 70, 2000, 0, 50},
        {"Alpha", "A1", 45, 1000, 70, 2000, 0, 50},
        {"Beta", "B1", 40, 1000, 70, 2000, 0, 50},
    };
    SwitchCatalogEntry pick = select_switch(catalog, 0, 24);
    CHECK(pick.vendor == "Beta");  // same price, lowest power, first vendor name
}

TEST_CASE("catalog CSV round-trips the bundled table") {
    std::stringstream csv(
        "vendor,model,power24_w,price24,power48_w,price48,op_temp_min_c,op_temp_max_c\n"
        "Juniper,EX2200-24T-4G,50,1212.80,76,2044.80,0,45\n"
        "Cisco,WS-C2960G-24TC-L,55,2277.00,80,4137.00,0,45\n"
        "D-Link,DGS-3420-28TC,50.8,1529.99,81,2549.99,0,50\n"
        "HP,HP 2920-24G (J9726A),58,1065.60,70,1873.85,0,55\n");
    auto parsed = parse_catalog_csv(csv);
    auto bundled = default_catalog();
    REQUIRE(parsed.size() == bundled.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].vendor == bundled[i].vendor);
        CHECK(parsed[i].model == bundled[i].model);
        CHECK(parsed[i].power24_w == doctest::Approx(bundled[i].power24_w));
        CHECK(parsed[i].price24 == bundled[i].price24);
        CHECK(parsed[i].power48_w == doctest::Approx(bundled[i].power48_w));
        CHECK(parsed[i].price48 == bundled[i].price48);
        CHECK(parsed[i].op_temp_max_c == bundled[i].op_temp_max_c);
    }

    std::stringstream bad_header("vendor,price\nA,1\n");
    CHECK_THROWS_AS(parse_catalog_csv(bad_header), ParseError);
    std::stringstream bad_row(
        "vendor,model,power24_w,price24,power48_w,price48,op_temp_min_c,op_temp_max_c\n"
        "A,B,x,1,1,1,0,45\n");
    CHECK_THROWS_AS(parse_catalog_csv(bad_row), ParseError);
}

TEST_CASE("night scenario powers down office switches and covered uplinks") {
    // a1, a2 office; a3 always-on. d1 carries office only; d2 carries a3.
    NetworkInstance inst = InstanceBuilder()
                               .user("u1", "B1", Profile::office)
                               .user("u2", "B1", Profile::office)
                               .user("u3", "B1", Profile::always_on)
                               .access("a1", "B1", Profile::office, 0, 4, 50)
                               .access("a2", "B1", Profile::office, 0, 4, 50)
                               .access("a3", "B1", Profile::always_on, 0, 4, 50)
                               .dist("d1", "B1", 0, 4, 80)
                               .dist("d2", "B1", 0, 4, 80)
                               .core(0, 100)
                               .ua("u1", "a1", 100)
                               .ua("u2", "a2", 100)
                               .ua("u3", "a3", 100)
                               .ad("a1", "d1", 100)
                               .ad("a2", "d1", 100)
                               .ad("a3", "d2", 100)
                               .dc("d1", 100)
                               .dc("d2", 100)
                               .build();
    DesignSolution sol;
    sol.user_assignment = {{"u1", "a1"}, {"u2", "a2"}, {"u3", "a3"}};
    sol.open_access = {"a1", "a2", "a3"};
    sol.access_assignment = {{"a1", "d1"}, {"a2", "d1"}, {"a3", "d2"}};
    sol.open_distribution = {"d1", "d2"};
    sol.total_cost = 3 * 100 + 3 * 100 + 2 * 100;

    PowerScenario without = night_scenario(inst, sol, false);
    CHECK(without.all_on_w == doctest::Approx(100 + 150 + 160));
    CHECK(without.off_access == std::set<std::string>{"a1", "a2"});
    CHECK(without.off_distribution.empty());
    CHECK(without.night_w == doctest::Approx(410 - 100));

    PowerScenario with = night_scenario(inst, sol, true);
    CHECK(with.off_distribution == std::set<std::string>{"d1"});
    CHECK(with.night_w == doctest::Approx(410 - 100 - 80));
}
