// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0
//
// ntnlab - feasibility calculator and protocol simulator for 5G NR over a
// transparent LEO constellation. Subcommands mirror the analysis pipeline:
// delay, doppler, residual-sweep, numerology, ra, harq-dim, harq, report.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ntnlab/report.hpp"
#include "ntnlab/scenario.hpp"

namespace {

using ntnlab::Scenario;

struct CommonOpts {
    std::string scenario_path;
    std::optional<std::uint64_t> seed;
    std::string output_path;
    std::string format;  // empty = per-command default
};

Scenario load_scenario(const CommonOpts& opts) {
    Scenario s = opts.scenario_path.empty() ? Scenario{} : Scenario::load_file(opts.scenario_path);
    if (opts.seed) s.seed = *opts.seed;
    return s;
}

void emit(const CommonOpts& opts, const std::string& payload) {
    if (opts.output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.output_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + opts.output_path + "'");
    }
    out << payload;
    if (!out) {
        throw std::runtime_error("failed writing output file '" + opts.output_path + "'");
    }
}

std::string format_or(const CommonOpts& opts, const std::string& fallback) {
    return opts.format.empty() ? fallback : opts.format;
}

[[noreturn]] void reject_format(const std::string& cmd, const std::string& fmt) {
    throw std::invalid_argument("format '" + fmt + "' is not supported by '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"5G-over-LEO feasibility lab: link geometry, Doppler pre-compensation, "
                 "random access and HARQ over a transparent satellite constellation"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    CommonOpts common;
    app.add_option("--scenario", common.scenario_path,
                   "Scenario JSON file (flat dotted keys, e.g. geometry.altitude_km)");
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "Override the scenario seed");
    app.add_option("--output", common.output_path, "Write the artifact to this file");
    app.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));

    // delay
    auto* cmd_delay = app.add_subcommand("delay", "Propagation delay budget");
    std::string payload_override;
    std::optional<double> elev_user, elev_gw, altitude;
    cmd_delay->add_option("--payload", payload_override, "transparent or regenerative");
    cmd_delay->add_option("--elev-user", elev_user, "User-leg elevation in degrees");
    cmd_delay->add_option("--elev-gw", elev_gw, "Gateway-leg elevation in degrees");
    cmd_delay->add_option("--altitude", altitude, "Orbit altitude in km");

    // doppler
    auto* cmd_doppler = app.add_subcommand("doppler", "Doppler shifts and residuals");

    // residual-sweep
    auto* cmd_sweep = app.add_subcommand(
        "residual-sweep", "Residual Doppler vs elevation and position error (CSV)");

    // numerology
    auto* cmd_numerology =
        app.add_subcommand("numerology", "Subcarrier spacing and CFO tolerance verdict");
    std::optional<double> residual_hz;
    std::optional<int> numerology_index;
    cmd_numerology->add_option("--residual-hz", residual_hz,
                               "Evaluate this residual instead of the scenario worst case");
    cmd_numerology->add_option("--index", numerology_index, "Numerology index n");

    // ra
    auto* cmd_ra = app.add_subcommand("ra", "Random Access timer analysis and simulation");
    std::string ra_mode_override;
    std::optional<double> rar_window, contention_resolution, ra_loss;
    bool ra_extended = false;
    cmd_ra->add_option("--mode", ra_mode_override,
                       "contention_based, contention_free or adhoc_deployment");
    cmd_ra->add_option("--rar-window", rar_window, "RAR window in ms");
    cmd_ra->add_option("--contention-resolution", contention_resolution,
                       "Contention resolution timer in ms");
    cmd_ra->add_flag("--extended", ra_extended, "Lift the standard timer caps");
    cmd_ra->add_option("--loss", ra_loss, "Link loss probability");

    // harq-dim
    auto* cmd_harq_dim = app.add_subcommand("harq-dim", "HARQ process dimensioning");

    // harq
    auto* cmd_harq = app.add_subcommand("harq", "HARQ throughput simulation");
    std::optional<int> harq_n;
    std::string harq_ack_mode;
    std::optional<double> harq_error, harq_duration;
    cmd_harq->add_option("--n-processes", harq_n, "Parallel process count (0 = dimension)");
    cmd_harq->add_option("--ack-mode", harq_ack_mode, "one_bit, two_bit or disabled");
    cmd_harq->add_option("--error-prob", harq_error, "Per-transmission error probability");
    cmd_harq->add_option("--duration", harq_duration, "Simulated time in ms");

    // report
    auto* cmd_report = app.add_subcommand("report", "Consolidated feasibility report");

    try {
        app.parse(argc, argv);
        if (seed_opt->count() > 0) common.seed = seed_value;

        Scenario s = load_scenario(common);

        if (cmd_delay->parsed()) {
            if (!payload_override.empty()) {
                s.orbit.payload = ntnlab::payload_mode_from_string(payload_override);
            }
            if (elev_user) s.elevation_user_deg = *elev_user;
            if (elev_gw) s.elevation_gateway_deg = *elev_gw;
            if (altitude) s.orbit.altitude_km = *altitude;
            s.validate();
            const std::string fmt = format_or(common, "text");
            if (fmt == "json") {
                emit(common, ntnlab::delay_json(s).dump(2) + "\n");
            } else if (fmt == "text") {
                emit(common, ntnlab::delay_text(s));
            } else {
                reject_format("delay", fmt);
            }
        } else if (cmd_doppler->parsed()) {
            s.validate();
            const std::string fmt = format_or(common, "text");
            if (fmt == "json") {
                emit(common, ntnlab::doppler_json(s).dump(2) + "\n");
            } else if (fmt == "text") {
                emit(common, ntnlab::doppler_text(s));
            } else {
                reject_format("doppler", fmt);
            }
        } else if (cmd_sweep->parsed()) {
            s.validate();
            const std::string fmt = format_or(common, "csv");
            if (fmt != "csv") reject_format("residual-sweep", fmt);
            emit(common, ntnlab::residual_sweep_csv(s));
        } else if (cmd_numerology->parsed()) {
            if (numerology_index) s.numerology_index = *numerology_index;
            s.validate();
            const std::string fmt = format_or(common, "text");
            if (residual_hz) {
                const auto num = ntnlab::numerology_from_index(s.numerology_index);
                const auto verdict =
                    ntnlab::waveform_feasibility(*residual_hz, num, s.cfo_policy);
                nlohmann::json j{{"index", num.index},
                                 {"scs_khz", num.scs_khz},
                                 {"residual_hz", *residual_hz},
                                 {"feasible", verdict.feasible},
                                 {"margin_hz", verdict.margin_hz},
                                 {"tolerance_hz", verdict.tolerance_hz}};
                if (fmt == "json") {
                    emit(common, j.dump(2) + "\n");
                } else if (fmt == "text") {
                    emit(common,
                         "SCS " + ntnlab::format_number(num.scs_khz) + " kHz: residual " +
                             ntnlab::format_number(*residual_hz) + " Hz -> " +
                             (verdict.feasible ? "feasible" : "infeasible") + " (margin " +
                             ntnlab::format_number(verdict.margin_hz) + " Hz)\n");
                } else {
                    reject_format("numerology", fmt);
                }
            } else if (fmt == "json") {
                emit(common, ntnlab::numerology_json(s).dump(2) + "\n");
            } else if (fmt == "text") {
                emit(common, ntnlab::numerology_text(s));
            } else {
                reject_format("numerology", fmt);
            }
        } else if (cmd_ra->parsed()) {
            if (!ra_mode_override.empty()) {
                s.ra_mode = ntnlab::ra_mode_from_string(ra_mode_override);
            }
            if (rar_window) s.ra_timers.rar_window_ms = *rar_window;
            if (contention_resolution) {
                s.ra_timers.contention_resolution_ms = *contention_resolution;
            }
            if (ra_extended) s.ra_timers.extended = true;
            if (ra_loss) s.ra_loss_probability = *ra_loss;
            s.validate();
            const std::string fmt = format_or(common, "json");
            if (fmt != "json") reject_format("ra", fmt);
            emit(common, ntnlab::ra_json(s).dump(2) + "\n");
        } else if (cmd_harq_dim->parsed()) {
            s.validate();
            const std::string fmt = format_or(common, "json");
            if (fmt != "json") reject_format("harq-dim", fmt);
            emit(common, ntnlab::harq_dim_json(s).dump(2) + "\n");
        } else if (cmd_harq->parsed()) {
            if (harq_n) s.harq_n_processes_override = *harq_n;
            if (!harq_ack_mode.empty()) {
                s.harq.ack_mode = ntnlab::ack_mode_from_string(harq_ack_mode);
            }
            if (harq_error) s.harq_error_prob = *harq_error;
            if (harq_duration) s.harq_duration_ms = *harq_duration;
            s.validate();
            const std::string fmt = format_or(common, "json");
            if (fmt == "json") {
                nlohmann::json j = ntnlab::harq_json(s);
                j["strategies"] = ntnlab::strategies_json(s);
                emit(common, j.dump(2) + "\n");
            } else if (fmt == "csv") {
                emit(common, ntnlab::strategy_table_csv(s));
            } else {
                reject_format("harq", fmt);
            }
        } else if (cmd_report->parsed()) {
            s.validate();
            const std::string fmt = format_or(common, "json");
            if (fmt == "json") {
                emit(common, ntnlab::report_json(s).dump(2) + "\n");
            } else if (fmt == "text") {
                emit(common, ntnlab::report_text(s));
            } else {
                reject_format("report", fmt);
            }
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
