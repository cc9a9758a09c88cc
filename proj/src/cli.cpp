#include "accessnet/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "accessnet/activity.hpp"
#include "accessnet/errors.hpp"
#include "accessnet/heuristic.hpp"
#include "accessnet/instance_gen.hpp"
#include "accessnet/optimizer.hpp"
#include "accessnet/savings.hpp"
#include "accessnet/serialize.hpp"
#include "accessnet/topology_io.hpp"

namespace accessnet {

namespace {

using nlohmann::json;

struct CommonOptions {
    std::string format = "json";
    std::string output_path;
    std::string config_path;
};

std::string scalar_text(const json& value) {
    return value.is_string() ? value.get<std::string>() : value.dump();
}

void render_table(std::ostream& os, const json& doc, const std::string& prefix) {
    for (const auto& [key, value] : doc.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            if (value.empty()) {
                os << name << ": (none)\n";
            } else {
                render_table(os, value, name);
            }
        } else if (value.is_array()) {
            bool flat_rows = !value.empty() && value.front().is_object();
            for (const auto& row : value) {
                if (!row.is_object()) continue;
                for (const auto& [ck, cv] : row.items()) flat_rows &= cv.is_primitive();
            }
            if (value.empty()) {
                os << name << ": (none)\n";
            } else if (value.front().is_object() && !flat_rows) {
                for (std::size_t i = 0; i < value.size(); ++i) {
                    render_table(os, value[i], name + "[" + std::to_string(i) + "]");
                }
            } else if (flat_rows) {
                std::vector<std::string> columns;
                for (const auto& [ck, cv] : value.front().items()) columns.push_back(ck);
                std::vector<std::size_t> widths;
                for (const auto& column : columns) widths.push_back(column.size());
                for (const auto& row : value) {
                    for (std::size_t c = 0; c < columns.size(); ++c) {
                        if (row.contains(columns[c])) {
                            widths[c] = std::max(widths[c], scalar_text(row[columns[c]]).size());
                        }
                    }
                }
                os << name << ":\n ";
                for (std::size_t c = 0; c < columns.size(); ++c) {
                    os << ' ' << columns[c] << std::string(widths[c] - columns[c].size(), ' ');
                }
                os << '\n';
                for (const auto& row : value) {
                    os << ' ';
                    for (std::size_t c = 0; c < columns.size(); ++c) {
                        std::string cell =
                            row.contains(columns[c]) ? scalar_text(row[columns[c]]) : "";
                        os << ' ' << cell << std::string(widths[c] - cell.size(), ' ');
                    }
                    os << '\n';
                }
            } else {
                os << name << ": [";
                for (std::size_t i = 0; i < value.size(); ++i) {
                    os << (i ? ", " : "") << scalar_text(value[i]);
                }
                os << "]\n";
            }
        } else {
            os << name << ": " << scalar_text(value) << '\n';
        }
    }
}

// Reports land on --output when given, otherwise on stdout.
int emit(const json& doc, const CommonOptions& opts, std::ostream& out, int exit_code = 0) {
    std::ofstream file;
    std::ostream* target = &out;
    if (!opts.output_path.empty()) {
        file.open(opts.output_path);
        if (!file) throw Error("io_error", "cannot write output file: " + opts.output_path);
        target = &file;
    }
    if (opts.format == "table") {
        render_table(*target, doc, "");
    } else {
        *target << doc.dump(2) << '\n';
    }
    return exit_code;
}

int emit_error(const std::string& code, const std::string& message, const CommonOptions& opts,
               std::ostream& out, json extra = json::object(), int exit_code = 1) {
    json doc;
    doc["error"] = {{"code", code}, {"message", message}};
    for (const auto& [key, value] : extra.items()) doc["error"][key] = value;
    CommonOptions json_only = opts;
    json_only.format = "json";
    return emit(doc, json_only, out, exit_code);
}

Money parse_money_flag(const std::string& text, const std::string& flag) {
    auto value = money_from_string(text);
    if (!value) throw ParseError("bad_money", flag + " must be a decimal amount, got '" + text + "'");
    return *value;
}

json load_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw ParseError("missing_file", std::string("cannot open ") + what + ": " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("bad_json", std::string(what) + ": " + e.what());
    }
}

std::map<std::string, std::string> building_map_from_topology(const NetworkInstance& inst) {
    std::map<std::string, std::string> mapping;
    for (const auto& a : inst.access_switches) mapping[a.id] = a.building;
    return mapping;
}

NetworkInstance load_validated_topology(const std::string& path, const CommonOptions& opts,
                                        std::ostream& out, int& rc) {
    NetworkInstance inst = load_topology_file(path);
    ValidationReport report = validate_instance(inst);
    if (!report.ok()) {
        json violations = json::array();
        for (const auto& v : report.violations) violations.push_back(to_json(v));
        rc = emit_error("invalid_instance", "topology fails validation", opts, out,
                        {{"violations", violations}});
    }
    return inst;
}

ClassifierConfig resolve_classifier_config(const CommonOptions& opts) {
    std::string path = opts.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("ACCESSNET_CONFIG")) path = env;
    }
    if (path.empty()) return {};
    return load_classifier_config_file(path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Energy-aware access network design and log analytics"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--format", common.format, "Report format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--output", common.output_path, "Write the report to a file instead of stdout");
    app.add_option("--config", common.config_path,
                   "Classifier config JSON (falls back to $ACCESSNET_CONFIG)");

    std::function<int()> action;

    // validate
    {
        auto* sub = app.add_subcommand("validate", "Check a topology file against the model rules");
        sub->fallthrough();
        auto topology = std::make_shared<std::string>();
        sub->add_option("--topology", *topology, "Topology JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->callback([&, topology] {
            action = [&, topology] {
                NetworkInstance inst = load_topology_file(*topology);
                return emit(to_json(validate_instance(inst)), common, out);
            };
        });
    }

    // optimize
    {
        auto* sub = app.add_subcommand("optimize", "Solve the design exactly (small instances)");
        sub->fallthrough();
        struct Opts {
            std::string topology;
            SolveLimits limits;
            bool oracle_check = false;
        };
        auto opts = std::make_shared<Opts>();
        sub->add_option("--topology", opts->topology, "Topology JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--max-nodes", opts->limits.max_nodes, "Search node budget")
            ->capture_default_str();
        sub->add_option("--time-budget", opts->limits.time_budget_s, "Wall-clock budget, seconds")
            ->capture_default_str();
        sub->add_flag("--oracle-check", opts->oracle_check,
                      "Cross-check against exhaustive enumeration (small instances only)");
        sub->callback([&, opts] {
            action = [&, opts] {
                int rc = 0;
                NetworkInstance inst = load_validated_topology(opts->topology, common, out, rc);
                if (rc) return rc;

                SolveResult result = solve_exact(inst, opts->limits);
                if (result.status == SolveStatus::infeasible) {
                    return emit_error("infeasible", "no assignment satisfies the constraints",
                                      common, out,
                                      {{"explored_nodes", result.explored_nodes}});
                }
                if (!result.solution) {
                    return emit_error("budget_exhausted",
                                      "limits hit before any feasible solution was found", common,
                                      out, {{"explored_nodes", result.explored_nodes}});
                }

                ValidationReport check = check_solution(inst, *result.solution);
                if (!check.ok()) {
                    json violations = json::array();
                    for (const auto& v : check.violations) violations.push_back(to_json(v));
                    return emit_error("internal_check_failed",
                                      "solver output fails its own feasibility check", common, out,
                                      {{"violations", violations}});
                }

                json doc = solution_document(*result.solution, result.proven_optimal(),
                                             result.explored_nodes);
                doc["status"] = to_string(result.status);
                if (opts->oracle_check) {
                    SolveResult oracle = brute_force(inst);
                    if (!oracle.solution || oracle.solution->total_cost !=
                                                result.solution->total_cost) {
                        json extra;
                        extra["solver_cost"] = money_to_major(result.solution->total_cost);
                        if (oracle.solution) {
                            extra["oracle_cost"] = money_to_major(oracle.solution->total_cost);
                        }
                        return emit_error("oracle_mismatch",
                                          "solver and exhaustive oracle disagree", common, out,
                                          extra);
                    }
                    doc["oracle_match"] = true;
                    doc["oracle_cost"] = money_to_major(oracle.solution->total_cost);
                }
                return emit(doc, common, out);
            };
        });
    }

    // heuristic
    {
        auto* sub = app.add_subcommand("heuristic", "Per-building design at scale");
        sub->fallthrough();
        auto topology = std::make_shared<std::string>();
        sub->add_option("--topology", *topology, "Topology JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->callback([&, topology] {
            action = [&, topology] {
                int rc = 0;
                NetworkInstance inst = load_validated_topology(*topology, common, out, rc);
                if (rc) return rc;

                HeuristicResult result;
                try {
                    result = heuristic_design(inst);
                } catch (const HeuristicError& e) {
                    json problems = json::array();
                    for (const auto& p : e.problems()) {
                        problems.push_back({{"building", p.building},
                                            {"code", p.code},
                                            {"detail", p.detail}});
                    }
                    return emit_error("heuristic_failed", e.what(), common, out,
                                      {{"problems", problems}});
                }

                ValidationReport check = check_solution(inst, result.solution);
                if (!check.ok()) {
                    json violations = json::array();
                    for (const auto& v : check.violations) violations.push_back(to_json(v));
                    return emit_error("internal_check_failed",
                                      "heuristic output fails the feasibility check", common, out,
                                      {{"violations", violations}});
                }

                json doc = solution_document(result.solution, false, 0);
                doc["buildings"] = json::array();
                for (const auto& plan : result.buildings) {
                    doc["buildings"].push_back(to_json(plan));
                }
                doc["wire_overhead"] = to_json(wire_overhead(inst, result.solution));
                return emit(doc, common, out);
            };
        });
    }

    // classify
    {
        auto* sub = app.add_subcommand("classify",
                                       "Knight/Office user classification from an activity log");
        sub->fallthrough();
        struct Opts {
            std::string activity;
            std::string topology;
            std::string buildings_path;
            int users_per_switch = 0;  // 0 = take from config
        };
        auto opts = std::make_shared<Opts>();
        sub->add_option("--activity", opts->activity, "Activity CSV")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--topology", opts->topology,
                        "Topology JSON; supplies the switch-to-building mapping")
            ->check(CLI::ExistingFile);
        sub->add_option("--buildings", opts->buildings_path,
                        "JSON object mapping switch id to building id")
            ->check(CLI::ExistingFile);
        sub->add_option("--users-per-switch", opts->users_per_switch,
                        "Users counted per access switch for the switch estimate");
        sub->callback([&, opts] {
            action = [&, opts] {
                ClassifierConfig cfg = resolve_classifier_config(common);
                if (opts->users_per_switch > 0) cfg.users_per_switch = opts->users_per_switch;

                std::ifstream in(opts->activity);
                if (!in) {
                    throw ParseError("missing_file",
                                     "cannot open activity log: " + opts->activity);
                }
                ActivityLog log = parse_activity_log(in);
                ClassificationResult result = classify_users(log, cfg);

                json doc = to_json(result);
                doc["malformed_rows"] = log.malformed_rows;
                if (!log.timezone.empty()) doc["timezone"] = log.timezone;

                std::map<std::string, std::string> mapping;
                if (!opts->buildings_path.empty()) {
                    json raw = load_json_file(opts->buildings_path, "building map");
                    for (const auto& [switch_id, building] : raw.items()) {
                        mapping[switch_id] = building.get<std::string>();
                    }
                } else if (!opts->topology.empty()) {
                    mapping = building_map_from_topology(load_topology_file(opts->topology));
                }
                if (!mapping.empty()) {
                    auto buildings = per_building_counts(result, mapping);
                    json per_building = json::object();
                    for (const auto& [building, counts] : buildings) {
                        per_building[building] = {{"knight", counts.knight},
                                                  {"office", counts.office}};
                    }
                    doc["per_building_counts"] = std::move(per_building);

                    AoEstimate estimate = estimate_ao_switches(buildings, cfg.users_per_switch);
                    json estimate_doc;
                    estimate_doc["users_per_switch"] = cfg.users_per_switch;
                    estimate_doc["estimator"] = "ceil(users / users_per_switch)";
                    estimate_doc["office_based_total"] = estimate.office_based_total;
                    estimate_doc["knight_based_total"] = estimate.knight_based_total;
                    json per_building_est = json::object();
                    for (const auto& [building, counts] : estimate.per_building) {
                        per_building_est[building] = {{"knight_based", counts.knight},
                                                      {"office_based", counts.office}};
                    }
                    estimate_doc["per_building"] = std::move(per_building_est);
                    doc["ao_switch_estimate"] = std::move(estimate_doc);
                }
                return emit(doc, common, out);
            };
        });
    }

    // pingreport
    {
        auto* sub = app.add_subcommand("pingreport", "Hourly unreachability counts from ping logs");
        sub->fallthrough();
        auto ping = std::make_shared<std::string>();
        sub->add_option("--ping", *ping, "Ping CSV")->required()->check(CLI::ExistingFile);
        sub->callback([&, ping] {
            action = [&, ping] {
                std::ifstream in(*ping);
                if (!in) throw ParseError("missing_file", "cannot open ping log: " + *ping);
                PingLog log = parse_ping_log(in);
                json doc = to_json(ping_report(log.samples));
                doc["malformed_rows"] = log.malformed_rows;
                return emit(doc, common, out);
            };
        });
    }

    // savings
    {
        auto* sub = app.add_subcommand("savings", "Percent monthly savings from switching off");
        sub->fallthrough();
        struct Opts {
            SavingsInput input;
            std::string topology;
            std::string solution_path;
            bool include_distribution = false;
        };
        auto opts = std::make_shared<Opts>();
        sub->add_option("--n-ao", opts->input.n_ao, "Access switches that can be switched off")
            ->required();
        sub->add_option("--n-total", opts->input.n_total, "All access switches")->required();
        sub->add_option("--night-hours", opts->input.night_hours, "Off hours per working-day night")
            ->capture_default_str();
        sub->add_option("--working-days", opts->input.working_days, "Working days per month")
            ->capture_default_str();
        sub->add_option("--weekend-days", opts->input.weekend_days, "Weekend days per month")
            ->capture_default_str();
        sub->add_option("--topology", opts->topology,
                        "Topology JSON for a power scenario section")
            ->check(CLI::ExistingFile);
        sub->add_option("--solution", opts->solution_path,
                        "Solution JSON for a power scenario section")
            ->check(CLI::ExistingFile);
        sub->add_flag("--include-distribution", opts->include_distribution,
                      "Also power off distribution switches serving only office-profile switches");
        sub->callback([&, opts] {
            action = [&, opts] {
                SavingsReport report;
                report.percent_monthly = savings_percent(opts->input);
                report.switch_off_hours_per_month =
                    opts->input.night_hours * opts->input.working_days +
                    SavingsInput::hours_per_day * opts->input.weekend_days;
                json doc = to_json(report);
                doc["n_ao"] = opts->input.n_ao;
                doc["n_total"] = opts->input.n_total;

                if (!opts->topology.empty() && !opts->solution_path.empty()) {
                    NetworkInstance inst = load_topology_file(opts->topology);
                    DesignSolution sol =
                        solution_from_json(load_json_file(opts->solution_path, "solution"));
                    doc["power"] =
                        to_json(night_scenario(inst, sol, opts->include_distribution));
                }
                return emit(doc, common, out);
            };
        });
    }

    // payback
    {
        auto* sub = app.add_subcommand("payback", "Wire investment and months to recover it");
        sub->fallthrough();
        struct Opts {
            int users = 0;
            double wire_per_user = 30;
            std::string wire_rate = "15.00";
            std::string monthly_saving;
            int n_ao = 0;
            double avg_watts = 0;
            double hours_off = 0;
            std::string tariff;
        };
        auto opts = std::make_shared<Opts>();
        sub->add_option("--users", opts->users, "Users rewired to a farther switch")->required();
        sub->add_option("--wire-per-user", opts->wire_per_user, "Extra meters per rewired user")
            ->capture_default_str();
        sub->add_option("--wire-rate", opts->wire_rate, "Cable cost per meter")
            ->capture_default_str();
        sub->add_option("--monthly-saving", opts->monthly_saving,
                        "Measured monthly bill saving; omit to model it from the flags below");
        sub->add_option("--n-ao", opts->n_ao, "Switch-off candidates (modeled saving)");
        sub->add_option("--avg-watts", opts->avg_watts, "Average switch draw (modeled saving)");
        sub->add_option("--hours-off", opts->hours_off, "Off hours per month (modeled saving)");
        sub->add_option("--tariff", opts->tariff, "Tariff per kWh (modeled saving)");
        sub->callback([&, opts] {
            action = [&, opts] {
                Money saving = 0;
                bool modeled = false;
                if (!opts->monthly_saving.empty()) {
                    saving = parse_money_flag(opts->monthly_saving, "--monthly-saving");
                } else if (!opts->tariff.empty()) {
                    saving = estimate_monthly_saving(opts->n_ao, opts->avg_watts, opts->hours_off,
                                                     parse_money_flag(opts->tariff, "--tariff"));
                    modeled = true;
                } else {
                    throw ParseError("bad_usage",
                                     "either --monthly-saving or the modeled-saving flags "
                                     "(--n-ao --avg-watts --hours-off --tariff) are required");
                }

                PaybackReport fragment = payback(
                    opts->users, opts->wire_per_user,
                    parse_money_flag(opts->wire_rate, "--wire-rate"), saving);
                SavingsReport report;
                report.extra_wire_m = fragment.extra_wire_m;
                report.wire_cost = fragment.wire_cost;
                report.monthly_bill_saving = saving;
                report.payback_months = fragment.payback_months;
                json doc = to_json(report);
                if (modeled) doc["monthly_saving_modeled"] = true;
                return emit(doc, common, out);
            };
        });
    }

    // catalog
    {
        auto* sub = app.add_subcommand("catalog", "Pick the cheapest switch rated for a site");
        sub->fallthrough();
        struct Opts {
            std::string catalog_path;
            int min_temp = 0;
            int ports = 24;
        };
        auto opts = std::make_shared<Opts>();
        sub->add_option("--catalog", opts->catalog_path, "Catalog CSV (default: bundled table)")
            ->check(CLI::ExistingFile);
        sub->add_option("--min-temp", opts->min_temp, "Required operating temperature, Celsius")
            ->required();
        sub->add_option("--ports", opts->ports, "Port count")
            ->check(CLI::IsMember({24, 48}))
            ->capture_default_str();
        sub->callback([&, opts] {
            action = [&, opts] {
                auto catalog = opts->catalog_path.empty() ? default_catalog()
                                                          : load_catalog_file(opts->catalog_path);
                SwitchCatalogEntry entry = select_switch(catalog, opts->min_temp, opts->ports);
                json doc;
                doc["selected"] = to_json(entry);
                doc["min_op_temp_c"] = opts->min_temp;
                doc["ports"] = opts->ports;
                doc["catalog_size"] = catalog.size();
                return emit(doc, common, out);
            };
        });
    }

    // gen
    {
        auto* sub = app.add_subcommand("gen",
                                       "Generate a random small test instance (uniform costs and "
                                       "lengths over the given ranges, complete in-building links)");
        sub->fallthrough();
        auto cfg = std::make_shared<GenConfig>();
        sub->add_option("--seed", cfg->seed, "RNG seed")->capture_default_str();
        sub->add_option("--users", cfg->users, "User count")->capture_default_str();
        sub->add_option("--access", cfg->access, "Access switch count")->capture_default_str();
        sub->add_option("--dist", cfg->dist, "Distribution switch count")->capture_default_str();
        sub->add_option("--buildings", cfg->buildings, "Building count")->capture_default_str();
        sub->add_option("--office-fraction", cfg->office_fraction,
                        "Probability a user is office-profile")
            ->capture_default_str();
        sub->add_option("--link-cost-min", cfg->link_cost_min, "Link cost range, minor units")
            ->capture_default_str();
        sub->add_option("--link-cost-max", cfg->link_cost_max, "Link cost range, minor units")
            ->capture_default_str();
        sub->add_option("--length-min", cfg->length_min_m, "Link length range, meters")
            ->capture_default_str();
        sub->add_option("--length-max", cfg->length_max_m, "Link length range, meters")
            ->capture_default_str();
        sub->add_option("--access-ports-min", cfg->access_ports_min,
                        "Lower bound on access switch ports (upper bound is the user count)")
            ->capture_default_str();
        sub->add_option("--dist-ports-min", cfg->dist_ports_min,
                        "Lower bound on distribution switch degree (upper bound is the access "
                        "switch count)")
            ->capture_default_str();
        sub->add_flag("--cost-from-length", cfg->cost_from_length,
                      "Price user links from length at the copper rate");
        sub->callback([&, cfg] {
            action = [&, cfg] {
                NetworkInstance inst = generate_instance(*cfg);
                std::ofstream file;
                std::ostream* target = &out;
                if (!common.output_path.empty()) {
                    file.open(common.output_path);
                    if (!file) {
                        throw Error("io_error",
                                    "cannot write output file: " + common.output_path);
                    }
                    target = &file;
                }
                save_topology(inst, *target);
                return 0;
            };
        });
    }

    std::vector<const char*> argv;
    argv.push_back("accessnet");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        return emit_error(e.code(), e.what(), common, out, json::object(), 2);
    } catch (const Error& e) {
        return emit_error(e.code(), e.what(), common, out);
    }
}

}  // namespace accessnet
