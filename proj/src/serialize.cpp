#include "accessnet/serialize.hpp"

#include <cmath>

#include "accessnet/errors.hpp"

namespace accessnet {

namespace {

using nlohmann::json;

double round2(double value) { return std::round(value * 100.0) / 100.0; }

}  // namespace

json to_json(const Violation& violation) {
    return {{"code", violation.code}, {"subject", violation.subject},
            {"detail", violation.detail}};
}

json to_json(const ValidationReport& report) {
    json doc;
    doc["valid"] = report.ok();
    doc["violations"] = json::array();
    for (const auto& v : report.violations) doc["violations"].push_back(to_json(v));
    doc["warnings"] = json::array();
    for (const auto& w : report.warnings) doc["warnings"].push_back(to_json(w));
    return doc;
}

json to_json(const DesignSolution& sol) {
    json doc;
    doc["user_assignment"] = json::object();
    for (const auto& [user, access] : sol.user_assignment) doc["user_assignment"][user] = access;
    doc["open_access"] = json::array();
    for (const auto& id : sol.open_access) doc["open_access"].push_back(id);
    doc["access_assignment"] = json::object();
    for (const auto& [access, dist] : sol.access_assignment) {
        doc["access_assignment"][access] = dist;
    }
    doc["open_distribution"] = json::array();
    for (const auto& id : sol.open_distribution) doc["open_distribution"].push_back(id);
    doc["total_cost"] = money_to_major(sol.total_cost);
    return doc;
}

json solution_document(const DesignSolution& sol, bool proven_optimal,
                       std::uint64_t explored_nodes) {
    json doc = to_json(sol);
    doc["proven_optimal"] = proven_optimal;
    doc["explored_nodes"] = explored_nodes;
    return doc;
}

DesignSolution solution_from_json(const json& doc) {
    DesignSolution sol;
    try {
        for (const auto& [user, access] : doc.at("user_assignment").items()) {
            sol.user_assignment[user] = access.get<std::string>();
        }
        for (const auto& id : doc.at("open_access")) {
            sol.open_access.insert(id.get<std::string>());
        }
        for (const auto& [access, dist] : doc.at("access_assignment").items()) {
            sol.access_assignment[access] = dist.get<std::string>();
        }
        for (const auto& id : doc.at("open_distribution")) {
            sol.open_distribution.insert(id.get<std::string>());
        }
        sol.total_cost = money_from_major(doc.at("total_cost").get<double>());
    } catch (const json::exception& e) {
        throw ParseError("bad_solution", std::string("solution document: ") + e.what());
    }
    return sol;
}

json to_json(const BuildingPlan& plan) {
    json doc;
    doc["building"] = plan.building;
    doc["distribution"] = plan.chosen_distribution;
    doc["users"] = plan.users.size();
    doc["used_access"] = plan.used_access;
    json assignments = json::array();
    for (const auto& a : plan.assignments) {
        assignments.push_back({{"user", a.user}, {"access", a.access}, {"length_m", a.length_m}});
    }
    doc["assignments"] = std::move(assignments);
    return doc;
}

json to_json(const WireOverhead& overhead) {
    return {{"extra_length_m", overhead.extra_length_m},
            {"extra_cost", money_to_major(overhead.extra_cost)}};
}

json to_json(const ClassificationResult& result) {
    json doc;
    doc["active_interfaces"] = result.active_interfaces;
    doc["knight_count"] = result.knight_users.size();
    doc["office_count"] = result.office_users.size();
    auto interface_list = [](const std::set<InterfaceKey>& keys) {
        json arr = json::array();
        for (const auto& key : keys) {
            arr.push_back({{"switch", key.switch_id}, {"interface", key.interface_id}});
        }
        return arr;
    };
    doc["knight_users"] = interface_list(result.knight_users);
    doc["office_users"] = interface_list(result.office_users);
    json series = json::array();
    for (const auto& point : result.per_day_knight_pct) {
        series.push_back({{"date", format_date(point.date_days)},
                          {"knight_pct", round2(point.knight_pct)}});
    }
    doc["per_day_knight_pct"] = std::move(series);
    json per_switch = json::object();
    for (const auto& [switch_id, counts] : result.per_switch_counts) {
        per_switch[switch_id] = {{"knight", counts.knight}, {"office", counts.office}};
    }
    doc["per_switch_counts"] = std::move(per_switch);
    doc["first_date"] = format_date(result.first_date_days);
    doc["last_date"] = format_date(result.last_date_days);
    return doc;
}

json to_json(const PingReport& report) {
    json hours = json::array();
    for (const auto& h : report.hours) {
        hours.push_back({{"hour", format_datetime(h.hour_start)},
                         {"exactly_once_missed", h.exactly_once_missed},
                         {"more_than_once_missed", h.more_than_once_missed}});
    }
    return {{"hours", std::move(hours)}};
}

json to_json(const SwitchCatalogEntry& entry) {
    return {{"vendor", entry.vendor},
            {"model", entry.model},
            {"power24_w", entry.power24_w},
            {"price24", money_to_major(entry.price24)},
            {"power48_w", entry.power48_w},
            {"price48", money_to_major(entry.price48)},
            {"op_temp_min_c", entry.op_temp_min_c},
            {"op_temp_max_c", entry.op_temp_max_c}};
}

json to_json(const SavingsReport& report) {
    json doc;
    if (report.percent_monthly) doc["percent_monthly"] = round2(*report.percent_monthly);
    if (report.switch_off_hours_per_month) {
        doc["switch_off_hours_per_month"] = *report.switch_off_hours_per_month;
    }
    if (report.extra_wire_m) doc["extra_wire_m"] = *report.extra_wire_m;
    if (report.wire_cost) doc["wire_cost"] = money_to_major(*report.wire_cost);
    if (report.monthly_bill_saving) {
        doc["monthly_bill_saving"] = money_to_major(*report.monthly_bill_saving);
    }
    if (report.payback_months) doc["payback_months"] = round2(*report.payback_months);
    return doc;
}

json to_json(const PowerScenario& scenario) {
    json doc;
    doc["all_on_w"] = scenario.all_on_w;
    doc["night_w"] = scenario.night_w;
    doc["off_access"] = scenario.off_access;
    doc["off_distribution"] = scenario.off_distribution;
    return doc;
}

}  // namespace accessnet
