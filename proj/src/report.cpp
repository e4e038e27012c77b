// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#include "ntnlab/report.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace ntnlab {

namespace {

using nlohmann::json;

json feasibility_json(const TimerFeasibility& f) {
    return json{{"timer_ms", f.timer_ms},
                {"required_ms", f.required_ms},
                {"feasible", f.feasible}};
}

json stats_json(const HarqStats& st) {
    return json{{"offered", st.offered},
                {"delivered", st.delivered},
                {"retransmissions", st.retransmissions},
                {"abandoned", st.abandoned},
                {"undecoded_losses", st.undecoded_losses},
                {"pending", st.pending},
                {"utilization", st.utilization},
                {"peak_buffer", st.peak_buffer},
                {"dci_process_bits", st.dci_process_bits}};
}

struct WorstResidual {
    double elevation_deg = 0.0;
    double error_km = 0.0;
    double residual_hz = 0.0;
};

// Largest-magnitude downlink residual across the sweep grid; ties resolve to
// the first row in sweep order.
WorstResidual worst_downlink_residual(const Scenario& s) {
    WorstResidual worst;
    bool first = true;
    for (double elev : s.sweep_elevations_deg) {
        for (double err : s.sweep_errors_km) {
            const double r = residual_doppler_at_elevation_hz(elev, err, s.downlink(),
                                                              s.orbit, s.earth);
            if (first || std::abs(r) > std::abs(worst.residual_hz)) {
                worst = {elev, err, r};
                first = false;
            }
        }
    }
    return worst;
}

DelayedLink scenario_ra_link(const Scenario& s) {
    return DelayedLink(s.delay().one_way_ms, s.ra_loss_probability, s.seed);
}

DelayedLink scenario_harq_link(const Scenario& s) {
    return DelayedLink(s.delay().one_way_ms, 0.0, s.seed);
}

RaConfig scenario_ra_config(const Scenario& s) {
    RaConfig cfg;
    cfg.mode = s.ra_mode;
    cfg.timers = s.ra_timers;
    cfg.processing_ms = s.ra_processing_ms;
    cfg.tx_time_ms = s.ra_tx_time_ms;
    cfg.timing_advance_ms = timing_advance_from_geometry_ms(
        s.elevation_user_deg, s.elevation_gateway_deg, s.orbit, s.earth);
    return cfg;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf, res.ptr);
}

std::string format_fixed(double value, int precision) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
    if (res.ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf, res.ptr);
}

json delay_json(const Scenario& s) {
    const LinkBudgetDelay d = s.delay();
    return json{{"payload_mode", to_string(d.payload)},
                {"elevation_user_deg", s.elevation_user_deg},
                {"elevation_gateway_deg", s.elevation_gateway_deg},
                {"altitude_km", s.orbit.altitude_km},
                {"t_user_sat_ms", d.user_sat_ms},
                {"t_sat_gw_ms", d.sat_gateway_ms},
                {"one_way_ms", d.one_way_ms},
                {"two_way_ms", d.two_way_ms}};
}

json doppler_json(const Scenario& s) {
    const WorstResidual worst = worst_downlink_residual(s);
    const double ul_ratio = s.uplink_hz / s.downlink_hz;
    return json{
        {"v_sat_km_s", orbital_speed_km_s(s.orbit, s.earth)},
        {"terrestrial_baseline_hz",
         terrestrial_doppler_hz(s.terrestrial_speed_km_h,
                                CarrierConfig::downlink(s.terrestrial_carrier_hz), s.earth)},
        {"terrestrial_speed_km_h", s.terrestrial_speed_km_h},
        {"terrestrial_carrier_hz", s.terrestrial_carrier_hz},
        {"min_elevation_deg", s.min_elevation_deg},
        {"max_doppler_dl_hz", max_doppler_hz(s.downlink(), s.min_elevation_deg, s.orbit, s.earth)},
        {"max_doppler_ul_hz", max_doppler_hz(s.uplink(), s.min_elevation_deg, s.orbit, s.earth)},
        {"doppler_at_user_elevation_dl_hz",
         instantaneous_doppler_hz(s.downlink(), s.elevation_user_deg, s.orbit, s.earth)},
        {"doppler_at_user_elevation_ul_hz",
         instantaneous_doppler_hz(s.uplink(), s.elevation_user_deg, s.orbit, s.earth)},
        {"worst_residual_elevation_deg", worst.elevation_deg},
        {"worst_residual_error_km", worst.error_km},
        {"worst_residual_dl_hz", worst.residual_hz},
        {"worst_residual_ul_hz", worst.residual_hz * ul_ratio}};
}

namespace {

// Largest along-track error whose zenith residual still fits inside the CFO
// tolerance; the zenith dominates every lower elevation, so this bounds the
// whole pass. Found by bisection (the residual grows monotonically with the
// error as long as the estimate stays visible).
double max_feasible_error_km(const Scenario& s, const CarrierConfig& carrier,
                             double tolerance_hz) {
    auto magnitude = [&](double err) {
        return std::abs(residual_doppler_at_elevation_hz(90.0, err, carrier, s.orbit, s.earth));
    };
    const double horizon_rad =
        horizon_central_angle_deg(s.orbit, s.earth) * (std::numbers::pi / 180.0);
    double hi = 0.999 * horizon_rad * s.earth.radius_km;  // estimate still visible
    if (magnitude(hi) <= tolerance_hz) return hi;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (magnitude(mid) <= tolerance_hz) lo = mid; else hi = mid;
    }
    return lo;
}

}  // namespace

json numerology_json(const Scenario& s) {
    const Numerology num = numerology_from_index(s.numerology_index);
    const WorstResidual worst = worst_downlink_residual(s);
    const double worst_ul = worst.residual_hz * (s.uplink_hz / s.downlink_hz);
    const WaveformVerdict dl = waveform_feasibility(worst.residual_hz, num, s.cfo_policy);
    const WaveformVerdict ul = waveform_feasibility(worst_ul, num, s.cfo_policy);
    return json{{"index", num.index},
                {"scs_khz", num.scs_khz},
                {"max_cfo_khz", max_tolerable_cfo_khz(num.scs_khz, s.cfo_policy)},
                {"worst_residual_dl_hz", worst.residual_hz},
                {"worst_residual_ul_hz", worst_ul},
                {"dl_feasible", dl.feasible},
                {"dl_margin_hz", dl.margin_hz},
                {"ul_feasible", ul.feasible},
                {"ul_margin_hz", ul.margin_hz},
                {"max_feasible_error_dl_km", max_feasible_error_km(s, s.downlink(), dl.tolerance_hz)},
                {"max_feasible_error_ul_km", max_feasible_error_km(s, s.uplink(), ul.tolerance_hz)}};
}

json ra_json(const Scenario& s) {
    const LinkBudgetDelay d = s.delay();
    const RaTimerAnalysis analysis = analyze_timers(s.ra_timers, d.two_way_ms, s.ra_processing_ms);
    const RaOutcome outcome = simulate_ra(scenario_ra_config(s), scenario_ra_link(s));

    json timeline = json::array();
    for (const auto& m : outcome.timeline) {
        json rec{{"label", m.label}, {"sent_ms", m.sent_ms}, {"delivered", m.delivered}};
        if (m.delivered) rec["arrival_ms"] = m.arrival_ms;
        timeline.push_back(std::move(rec));
    }
    return json{
        {"mode", to_string(s.ra_mode)},
        {"timers",
         json{{"rar_window_ms", s.ra_timers.rar_window_ms},
              {"contention_resolution_ms", s.ra_timers.contention_resolution_ms},
              {"extended", s.ra_timers.extended}}},
        {"one_way_delay_ms", d.one_way_ms},
        {"processing_ms", s.ra_processing_ms},
        {"two_way_delay_ms", d.two_way_ms},
        {"analysis",
         json{{"rar", feasibility_json(analysis.rar)},
              {"contention_resolution", feasibility_json(analysis.contention_resolution)},
              {"min_rar_window_ms", min_rar_window_ms(d.two_way_ms, s.ra_processing_ms)}}},
        {"simulation",
         json{{"success", outcome.success},
              {"failure_step",
               outcome.failure_step ? json(to_string(*outcome.failure_step)) : json(nullptr)},
              {"completion_time_ms", outcome.completion_time_ms},
              {"timing_advance_ms", outcome.timing_advance_ms},
              {"messages_over_air", outcome.messages_over_air},
              {"timeline", std::move(timeline)}}}};
}

json harq_dim_json(const Scenario& s) {
    const LinkBudgetDelay d = s.delay();
    const double rounded = s.two_way_rounded_ms();
    const HarqConfig cfg = s.resolved_harq();
    const int n_paper = min_processes(rounded, cfg.ack_window_ms, cfg.tti_ms);
    const int n_exact = min_processes(d.two_way_ms, cfg.ack_window_ms, cfg.tti_ms);
    constexpr int kLteProcesses = 8;
    const double ratio =
        buffer_requirement(n_paper, cfg.tti_ms, cfg.per_tti_soft_bits) /
        buffer_requirement(kLteProcesses, cfg.tti_ms, cfg.per_tti_soft_bits);
    return json{{"two_way_delay_ms", d.two_way_ms},
                {"two_way_delay_rounded_ms", rounded},
                {"ack_window_ms", cfg.ack_window_ms},
                {"tti_ms", cfg.tti_ms},
                {"n_min_paper_rounding", n_paper},
                {"n_min_exact", n_exact},
                {"dci_bits", dci_process_bits(n_paper)},
                {"dci_bits_exact", dci_process_bits(n_exact)},
                {"lte_baseline_processes", kLteProcesses},
                {"buffer_ratio_vs_lte", ratio}};
}

json harq_json(const Scenario& s) {
    const HarqConfig cfg = s.resolved_harq();
    const HarqStats st =
        simulate_harq(cfg, scenario_harq_link(s), s.harq_error_prob, s.harq_duration_ms, s.seed);
    json j = stats_json(st);
    j["n_processes"] = cfg.n_processes;
    j["ack_mode"] = to_string(cfg.ack_mode);
    j["error_prob"] = s.harq_error_prob;
    j["duration_ms"] = s.harq_duration_ms;
    j["buffer_requirement"] =
        buffer_requirement(cfg.n_processes, cfg.tti_ms, cfg.per_tti_soft_bits);
    return j;
}

namespace {

std::vector<StrategyRow> scenario_strategies(const Scenario& s) {
    const HarqConfig base = s.resolved_harq();
    const int full = min_processes(s.two_way_rounded_ms(), base.ack_window_ms, base.tti_ms);
    return compare_strategies(scenario_harq_link(s), s.harq_error_prob, s.harq_duration_ms,
                              s.seed, full, s.harq_reduced_processes, base);
}

}  // namespace

json strategies_json(const Scenario& s) {
    json rows = json::array();
    for (const auto& row : scenario_strategies(s)) {
        json r = stats_json(row.stats);
        r["strategy"] = row.strategy;
        r["n_processes"] = row.config.n_processes;
        r["ack_mode"] = to_string(row.config.ack_mode);
        r["buffer_requirement"] = row.buffer_requirement;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string residual_sweep_csv(const Scenario& s) {
    const CarrierConfig carriers[] = {s.downlink(), s.uplink()};
    const auto rows = residual_sweep(s.sweep_elevations_deg, s.sweep_errors_km,
                                     carriers, s.orbit, s.earth);
    std::string out = "elevation_deg,error_km,direction,residual_hz\n";
    for (const auto& row : rows) {
        out += format_number(row.elevation_deg);
        out += ',';
        out += format_number(row.error_km);
        out += ',';
        out += to_string(row.direction);
        out += ',';
        out += format_number(row.residual_hz);
        out += '\n';
    }
    return out;
}

std::string strategy_table_csv(const Scenario& s) {
    std::string out = "strategy,n_processes,utilization,retransmissions,peak_buffer,dci_bits\n";
    for (const auto& row : scenario_strategies(s)) {
        out += row.strategy;
        out += ',';
        out += std::to_string(row.config.n_processes);
        out += ',';
        out += format_number(row.stats.utilization);
        out += ',';
        out += std::to_string(row.stats.retransmissions);
        out += ',';
        out += format_number(row.stats.peak_buffer);
        out += ',';
        out += std::to_string(row.stats.dci_process_bits);
        out += '\n';
    }
    return out;
}

json report_json(const Scenario& s) {
    json harq = harq_dim_json(s);
    harq["default_run"] = harq_json(s);
    harq["strategies"] = strategies_json(s);
    return json{{"scenario", s.to_json()},
                {"delay", delay_json(s)},
                {"doppler", doppler_json(s)},
                {"numerology", numerology_json(s)},
                {"random_access", ra_json(s)},
                {"harq", std::move(harq)}};
}

std::string delay_text(const Scenario& s) {
    const LinkBudgetDelay d = s.delay();
    std::ostringstream out;
    out << "Propagation delay budget (" << to_string(d.payload) << " payload, h = "
        << format_number(s.orbit.altitude_km) << " km)\n"
        << "  user-satellite leg (" << format_number(s.elevation_user_deg)
        << " deg): " << format_fixed(d.user_sat_ms, 3) << " ms\n"
        << "  satellite-gateway leg (" << format_number(s.elevation_gateway_deg)
        << " deg): " << format_fixed(d.sat_gateway_ms, 3) << " ms\n"
        << "  one-way: " << format_fixed(d.one_way_ms, 3) << " ms\n"
        << "  two-way: " << format_fixed(d.two_way_ms, 3) << " ms\n";
    return out.str();
}

std::string doppler_text(const Scenario& s) {
    const json j = doppler_json(s);
    std::ostringstream out;
    out << "Doppler summary\n"
        << "  orbital speed: " << format_fixed(j["v_sat_km_s"].get<double>(), 4) << " km/s\n"
        << "  terrestrial baseline (" << format_number(s.terrestrial_speed_km_h)
        << " km/h @ " << format_number(s.terrestrial_carrier_hz / 1e9)
        << " GHz): " << format_fixed(j["terrestrial_baseline_hz"].get<double>() / 1e3, 3)
        << " kHz\n"
        << "  max Doppler DL: " << format_fixed(j["max_doppler_dl_hz"].get<double>() / 1e3, 1)
        << " kHz, UL: " << format_fixed(j["max_doppler_ul_hz"].get<double>() / 1e3, 1)
        << " kHz (at " << format_number(s.min_elevation_deg) << " deg elevation)\n"
        << "  worst residual after pre-compensation: DL "
        << format_fixed(j["worst_residual_dl_hz"].get<double>() / 1e3, 3) << " kHz, UL "
        << format_fixed(j["worst_residual_ul_hz"].get<double>() / 1e3, 3) << " kHz (at "
        << format_number(j["worst_residual_elevation_deg"].get<double>()) << " deg, "
        << format_number(j["worst_residual_error_km"].get<double>()) << " km error)\n";
    return out.str();
}

std::string numerology_text(const Scenario& s) {
    const json j = numerology_json(s);
    std::ostringstream out;
    out << "Waveform feasibility (SCS = " << format_number(j["scs_khz"].get<double>())
        << " kHz, n = " << j["index"].get<int>() << ")\n"
        << "  tolerable CFO: " << format_number(j["max_cfo_khz"].get<double>()) << " kHz\n"
        << "  DL residual " << format_fixed(j["worst_residual_dl_hz"].get<double>() / 1e3, 3)
        << " kHz -> " << (j["dl_feasible"].get<bool>() ? "feasible" : "infeasible")
        << " (margin " << format_fixed(j["dl_margin_hz"].get<double>() / 1e3, 3) << " kHz)\n"
        << "  UL residual " << format_fixed(j["worst_residual_ul_hz"].get<double>() / 1e3, 3)
        << " kHz -> " << (j["ul_feasible"].get<bool>() ? "feasible" : "infeasible")
        << " (margin " << format_fixed(j["ul_margin_hz"].get<double>() / 1e3, 3) << " kHz)\n"
        << "  position error stays tolerable up to "
        << format_fixed(j["max_feasible_error_dl_km"].get<double>(), 1) << " km (DL) / "
        << format_fixed(j["max_feasible_error_ul_km"].get<double>(), 1) << " km (UL)\n";
    return out.str();
}

std::string report_text(const Scenario& s) {
    const json ra = ra_json(s);
    const json dim = harq_dim_json(s);
    std::ostringstream out;
    out << "=== NTN feasibility report ===\n\n"
        << delay_text(s) << "\n"
        << doppler_text(s) << "\n"
        << numerology_text(s) << "\n";
    out << "Random access (" << ra["mode"].get<std::string>() << ")\n"
        << "  RAR window " << format_number(ra["analysis"]["rar"]["timer_ms"].get<double>())
        << " ms vs required "
        << format_fixed(ra["analysis"]["rar"]["required_ms"].get<double>(), 3) << " ms: "
        << (ra["analysis"]["rar"]["feasible"].get<bool>() ? "feasible" : "infeasible") << "\n"
        << "  contention resolution "
        << format_number(ra["analysis"]["contention_resolution"]["timer_ms"].get<double>())
        << " ms vs required "
        << format_fixed(ra["analysis"]["contention_resolution"]["required_ms"].get<double>(), 3)
        << " ms: "
        << (ra["analysis"]["contention_resolution"]["feasible"].get<bool>() ? "feasible"
                                                                            : "infeasible")
        << "\n"
        << "  minimum workable RAR window: "
        << format_fixed(ra["analysis"]["min_rar_window_ms"].get<double>(), 3) << " ms\n"
        << "  simulated outcome: "
        << (ra["simulation"]["success"].get<bool>()
                ? std::string("success")
                : "failure (" + ra["simulation"]["failure_step"].get<std::string>() + ")")
        << " at " << format_fixed(ra["simulation"]["completion_time_ms"].get<double>(), 3)
        << " ms\n\n";
    out << "HARQ dimensioning\n"
        << "  two-way delay: " << format_fixed(dim["two_way_delay_ms"].get<double>(), 3)
        << " ms (rounded " << format_number(dim["two_way_delay_rounded_ms"].get<double>())
        << " ms)\n"
        << "  minimum processes: " << dim["n_min_paper_rounding"].get<int>()
        << " (exact delay: " << dim["n_min_exact"].get<int>() << ")\n"
        << "  DCI process field: " << dim["dci_bits"].get<int>() << " bits\n"
        << "  soft-buffer ratio vs the 8-process LTE baseline: "
        << format_number(dim["buffer_ratio_vs_lte"].get<double>()) << "x\n";
    out << "\nHARQ strategies (error_prob = " << format_number(s.harq_error_prob)
        << ", duration = " << format_number(s.harq_duration_ms) << " ms)\n";
    out << strategy_table_csv(s);
    return out.str();
}

}  // namespace ntnlab
