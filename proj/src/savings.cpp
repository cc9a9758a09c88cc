#include "accessnet/savings.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <tuple>

#include "accessnet/errors.hpp"

namespace accessnet {

double network_power(const NetworkInstance& inst, const std::set<std::string>& on_access,
                     const std::set<std::string>& on_distribution) {
    double watts = inst.core.power_w;
    for (const auto& id : on_access) {
        const AccessSwitch* a = inst.find_access(id);
        if (!a) throw Error("unknown_switch", "no access switch with id " + id);
        watts += a->power_w;
    }
    for (const auto& id : on_distribution) {
        const DistributionSwitch* d = inst.find_distribution(id);
        if (!d) throw Error("unknown_switch", "no distribution switch with id " + id);
        watts += d->power_w;
    }
    return watts;
}

double savings_percent(const SavingsInput& input) {
    if (input.n_total <= 0) {
        throw Error("bad_savings_input", "total access switch count must be positive");
    }
    if (input.n_ao < 0 || input.n_ao > input.n_total) {
        throw Error("bad_savings_input", "switch-off candidates must lie in [0, total]");
    }
    if (input.working_days + input.weekend_days != SavingsInput::days_per_month) {
        throw Error("bad_savings_input", "working and weekend days must sum to 30");
    }
    if (input.night_hours <= 0 || input.night_hours >= SavingsInput::hours_per_day) {
        throw Error("bad_savings_input", "night hours must be strictly between 0 and 24");
    }
    const double off_hours = input.night_hours * input.working_days +
                             SavingsInput::hours_per_day * input.weekend_days;
    const double month_hours =
        static_cast<double>(SavingsInput::hours_per_day) * SavingsInput::days_per_month;
    return 100.0 * input.n_ao * off_hours / (input.n_total * month_hours);
}

PaybackReport payback(int n_uo, double wire_per_user_m, Money wire_rate_per_m,
                      Money monthly_saving) {
    if (monthly_saving <= 0) {
        throw Error("no_payback", "monthly saving must be positive for a payback period");
    }
    if (n_uo < 0 || wire_per_user_m < 0 || wire_rate_per_m < 0) {
        throw Error("bad_argument", "wire quantities must be non-negative");
    }
    PaybackReport report;
    report.extra_wire_m = static_cast<double>(n_uo) * wire_per_user_m;
    report.wire_cost = static_cast<Money>(
        std::llround(report.extra_wire_m * static_cast<double>(wire_rate_per_m)));
    report.payback_months =
        static_cast<double>(report.wire_cost) / static_cast<double>(monthly_saving);
    return report;
}

Money estimate_monthly_saving(int n_ao, double avg_switch_watts, double hours_off_per_month,
                              Money tariff_per_kwh) {
    if (n_ao < 0 || avg_switch_watts < 0 || hours_off_per_month < 0 || tariff_per_kwh < 0) {
        throw Error("bad_argument", "saving estimate inputs must be non-negative");
    }
    const double kwh = n_ao * avg_switch_watts * hours_off_per_month / 1000.0;
    return static_cast<Money>(std::llround(kwh * static_cast<double>(tariff_per_kwh)));
}

std::vector<SwitchCatalogEntry> default_catalog() {
    return {
        {"Juniper", "EX2200-24T-4G", 50.0, 121'280, 76.0, 204'480, 0, 45},
        {"Cisco", "WS-C2960G-24TC-L", 55.0, 227'700, 80.0, 413'700, 0, 45},
        {"D-Link", "DGS-3420-28TC", 50.8, 152'999, 81.0, 254'999, 0, 50},
        {"HP", "HP 2920-24G (J9726A)", 58.0, 106'560, 70.0, 187'385, 0, 55},
    };
}

std::vector<SwitchCatalogEntry> parse_catalog_csv(std::istream& in) {
    constexpr const char* kHeader =
        "vendor,model,power24_w,price24,power48_w,price48,op_temp_min_c,op_temp_max_c";
    std::string line;
    if (!std::getline(in, line)) throw ParseError("malformed_header", "empty catalog file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader) {
        throw ParseError("malformed_header",
                         "expected header '" + std::string(kHeader) + "', got '" + line + "'");
    }

    std::vector<SwitchCatalogEntry> catalog;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

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
        if (fields.size() != 8) {
            throw ParseError("bad_catalog_row",
                             "line " + std::to_string(line_no) + ": expected 8 fields");
        }
        SwitchCatalogEntry entry;
        entry.vendor = fields[0];
        entry.model = fields[1];
        try {
            entry.power24_w = std::stod(fields[2]);
            entry.power48_w = std::stod(fields[4]);
            entry.op_temp_min_c = std::stoi(fields[6]);
            entry.op_temp_max_c = std::stoi(fields[7]);
        } catch (const std::exception&) {
            throw ParseError("bad_catalog_row",
                             "line " + std::to_string(line_no) + ": bad numeric field");
        }
        auto price24 = money_from_string(fields[3]);
        auto price48 = money_from_string(fields[5]);
        if (!price24 || !price48) {
            throw ParseError("bad_catalog_row",
                             "line " + std::to_string(line_no) + ": bad price field");
        }
        entry.price24 = *price24;
        entry.price48 = *price48;
        catalog.push_back(std::move(entry));
    }
    return catalog;
}

std::vector<SwitchCatalogEntry> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("missing_file", "cannot open catalog file: " + path);
    return parse_catalog_csv(in);
}

SwitchCatalogEntry select_switch(const std::vector<SwitchCatalogEntry>& catalog, int min_op_temp_c,
                                 int ports) {
    if (ports != 24 && ports != 48) {
        throw Error("bad_argument", "port count must be 24 or 48");
    }
    const SwitchCatalogEntry* best = nullptr;
    for (const auto& entry : catalog) {
        if (entry.op_temp_max_c < min_op_temp_c) continue;
        const Money price = ports == 24 ? entry.price24 : entry.price48;
        const double power = ports == 24 ? entry.power24_w : entry.power48_w;
        if (!best) {
            best = &entry;
            continue;
        }
        const Money best_price = ports == 24 ? best->price24 : best->price48;
        const double best_power = ports == 24 ? best->power24_w : best->power48_w;
        if (std::tie(price, power, entry.vendor) <
            std::tie(best_price, best_power, best->vendor)) {
            best = &entry;
        }
    }
    if (!best) {
        throw Error("no_switch_meets_temperature",
                    "no catalog entry is rated for " + std::to_string(min_op_temp_c) + " C");
    }
    return *best;
}

PowerScenario night_scenario(const NetworkInstance& inst, const DesignSolution& sol,
                             bool include_distribution) {
    PowerScenario scenario;
    scenario.all_on_w = network_power(inst, sol.open_access, sol.open_distribution);

    for (const auto& id : sol.open_access) {
        const AccessSwitch* a = inst.find_access(id);
        if (a && a->profile == Profile::office) scenario.off_access.insert(id);
    }
    if (include_distribution) {
        for (const auto& dist_id : sol.open_distribution) {
            bool all_office = true;
            for (const auto& [access_id, uplink] : sol.access_assignment) {
                if (uplink != dist_id) continue;
                const AccessSwitch* a = inst.find_access(access_id);
                all_office &= a && a->profile == Profile::office;
            }
            if (all_office) scenario.off_distribution.insert(dist_id);
        }
    }

    std::set<std::string> night_access, night_dist;
    for (const auto& id : sol.open_access) {
        if (!scenario.off_access.count(id)) night_access.insert(id);
    }
    for (const auto& id : sol.open_distribution) {
        if (!scenario.off_distribution.count(id)) night_dist.insert(id);
    }
    scenario.night_w = network_power(inst, night_access, night_dist);
    return scenario;
}

}  // namespace accessnet
