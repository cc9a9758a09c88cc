#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "accessnet/model.hpp"
#include "accessnet/solution.hpp"

namespace accessnet {

// Operational power, monthly switch-off savings, wiring payback and the
// temperature-aware switch catalog.

// Total draw of the powered-on devices; the core switch is always on and
// devices are not energy proportional, so power is a plain sum. Unknown ids
// raise Error("unknown_switch").
double network_power(const NetworkInstance& inst, const std::set<std::string>& on_access,
                     const std::set<std::string>& on_distribution);

struct SavingsInput {
    int n_ao = 0;      // switch-off candidates
    int n_total = 0;   // all access switches
    double night_hours = 12;
    int working_days = 22;
    int weekend_days = 8;

    static constexpr int hours_per_day = 24;
    static constexpr int days_per_month = 30;
};

// 100 * n_ao * (night_hours * working_days + 24 * weekend_days)
//     / (n_total * 24 * 30). Raises Error("bad_savings_input") when the input
// invariants fail (n_total of zero included).
double savings_percent(const SavingsInput& input);

struct PaybackReport {
    double extra_wire_m = 0;
    Money wire_cost = 0;
    double payback_months = 0;
};

// extra wire = users * meters each; cost at the wire rate; months to recover
// the cost from the monthly bill saving. Zero or negative saving raises
// Error("no_payback").
PaybackReport payback(int n_uo, double wire_per_user_m, Money wire_rate_per_m,
                      Money monthly_saving);

// Modeled bill saving from average switch wattage, monthly off-hours and a
// tariff; an estimate, not a measured figure.
Money estimate_monthly_saving(int n_ao, double avg_switch_watts, double hours_off_per_month,
                              Money tariff_per_kwh);

struct SwitchCatalogEntry {
    std::string vendor;
    std::string model;
    double power24_w = 0;
    Money price24 = 0;
    double power48_w = 0;
    Money price48 = 0;
    int op_temp_min_c = 0;
    int op_temp_max_c = 0;
};

// The four bundled access-layer switches (Juniper, Cisco, D-Link, HP).
std::vector<SwitchCatalogEntry> default_catalog();

// CSV with header
// `vendor,model,power24_w,price24,power48_w,price48,op_temp_min_c,op_temp_max_c`.
std::vector<SwitchCatalogEntry> parse_catalog_csv(std::istream& in);
std::vector<SwitchCatalogEntry> load_catalog_file(const std::string& path);

// Cheapest entry rated for at least min_op_temp at the requested port count
// (24 or 48); ties by lower power, then vendor name. Raises
// Error("no_switch_meets_temperature") when nothing qualifies.
SwitchCatalogEntry select_switch(const std::vector<SwitchCatalogEntry>& catalog, int min_op_temp_c,
                                 int ports);

struct PowerScenario {
    double all_on_w = 0;
    double night_w = 0;
    std::set<std::string> off_access;
    std::set<std::string> off_distribution;
};

// Night scenario for a designed solution: office-profile access switches go
// dark; with include_distribution, so does any open distribution switch whose
// attached open access switches are all office-profile.
PowerScenario night_scenario(const NetworkInstance& inst, const DesignSolution& sol,
                             bool include_distribution);

struct SavingsReport {
    std::optional<double> percent_monthly;
    std::optional<double> switch_off_hours_per_month;
    std::optional<double> extra_wire_m;
    std::optional<Money> wire_cost;
    std::optional<Money> monthly_bill_saving;
    std::optional<double> payback_months;
};

}  // namespace accessnet
