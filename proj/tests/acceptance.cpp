// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// process exits non-zero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ntnlab/report.hpp"
#include "ntnlab/scenario.hpp"
#include "oracles.hpp"

using namespace ntnlab;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }

    void expect_rel(double value, double reference, double tolerance,
                    const std::string& what) {
        const double rel = std::abs(value - reference) / std::abs(reference);
        if (rel > tolerance && ok) {
            ok = false;
            detail = what + ": got " + format_number(value) + ", want " +
                     format_number(reference) + " within " + format_number(tolerance * 100) +
                     "% (off by " + format_number(rel * 100) + "%)";
        }
    }
};

int g_failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Checker&)>& body) {
    Checker c;
    body(c);
    if (c.ok) {
        std::printf("[PASS] criterion %2d: %s\n", id, title.c_str());
    } else {
        ++g_failures;
        std::printf("[FAIL] criterion %2d: %s\n         %s\n", id, title.c_str(),
                    c.detail.c_str());
    }
    std::fflush(stdout);
}

}  // namespace

int main() {
    const Scenario base;  // the paper scenario

    criterion(1, "delay reproduction (12.158 / 13.672 / 25.83 / 51.66 ms, 0.2%)", [&](Checker& c) {
        const LinkBudgetDelay d = base.delay();
        c.expect_rel(d.user_sat_ms, 12.158, 0.002, "T_gRN-Sat");
        c.expect_rel(d.sat_gateway_ms, 13.672, 0.002, "T_Sat-GW");
        c.expect_rel(d.one_way_ms, 25.83, 0.002, "one-way");
        c.expect_rel(d.two_way_ms, 51.66, 0.002, "two-way");
    });

    criterion(2, "regenerative reproduction (24.32 ms two-way, 0.2%)", [&](Checker& c) {
        Scenario s = base;
        s.orbit.payload = PayloadMode::regenerative;
        c.expect_rel(s.delay().two_way_ms, 24.32, 0.002, "regenerative two-way");
    });

    criterion(3, "orbital speed (7.1171 km/s, 0.1%)", [&](Checker& c) {
        c.expect_rel(orbital_speed_km_s(base.orbit, base.earth), 7.1171, 0.001, "v_sat");
    });

    criterion(4, "terrestrial baseline (1.85 kHz, within 3% of 1.9 kHz)", [&](Checker& c) {
        const double f = terrestrial_doppler_hz(
            base.terrestrial_speed_km_h, CarrierConfig::downlink(base.terrestrial_carrier_hz),
            base.earth);
        c.expect(std::abs(f - 1850.0) <= 5.0, "baseline is not 1.85 kHz to three digits: " +
                                                  format_number(f) + " Hz");
        c.expect_rel(f, 1900.0, 0.03, "vs the paper's rounded 1.9 kHz");
    });

    criterion(5, "Doppler band [350, 620] kHz at the horizon, UL/DL ratio exactly 1.5",
              [&](Checker& c) {
        const double dl = max_doppler_hz(base.downlink(), 0.0, base.orbit, base.earth);
        const double ul = max_doppler_hz(base.uplink(), 0.0, base.orbit, base.earth);
        c.expect(dl >= 350e3 && dl <= 620e3, "DL horizon Doppler outside the band: " +
                                                 format_number(dl) + " Hz");
        c.expect(ul >= 350e3 && ul <= 620e3, "UL horizon Doppler outside the band: " +
                                                 format_number(ul) + " Hz");
        c.expect(ul == 1.5 * dl, "UL/DL ratio is not exactly 1.5");
    });

    criterion(6, "Doppler oracle equivalence (0.01%) and residual structure", [&](Checker& c) {
        for (double elev = 1.0; elev <= 89.0; elev += 1.0) {
            const double closed =
                instantaneous_doppler_hz(base.downlink(), elev, base.orbit, base.earth);
            const double fd = oracles::finite_difference_doppler_hz(
                base.downlink_hz, elev, base.earth.radius_km, base.orbit.altitude_km,
                base.earth.mu_km3_s2, base.earth.light_speed_km_s);
            c.expect_rel(closed, fd, 1e-4,
                         "closed form vs finite difference at " + format_number(elev) + " deg");
        }
        // Structural reproduction of the residual figure: zero at zero error,
        // exact carrier scaling, zenith dominance at every error.
        const CarrierConfig carriers[] = {base.downlink(), base.uplink()};
        const auto rows = residual_sweep(base.sweep_elevations_deg, base.sweep_errors_km,
                                         carriers, base.orbit, base.earth);
        const std::size_t block = rows.size() / 2;
        for (std::size_t i = 0; i < block; ++i) {
            if (rows[i].error_km == 0.0) {
                c.expect(rows[i].residual_hz == 0.0, "nonzero residual at zero error");
            }
            c.expect(rows[block + i].residual_hz == 1.5 * rows[i].residual_hz,
                     "UL residual is not exactly 1.5x DL");
        }
        for (double err : base.sweep_errors_km) {
            if (err == 0.0) continue;
            const double zenith = std::abs(
                residual_doppler_at_elevation_hz(90.0, err, base.downlink(), base.orbit, base.earth));
            for (double elev : base.sweep_elevations_deg) {
                const double other = std::abs(residual_doppler_at_elevation_hz(
                    elev, err, base.downlink(), base.orbit, base.earth));
                c.expect(zenith >= other, "zenith does not dominate at error " +
                                              format_number(err) + " km");
            }
        }
    });

    criterion(7, "SCS family {15..960} kHz and 30.4 kHz CFO at 480 kHz, exact", [&](Checker& c) {
        const double expected[] = {15.0, 30.0, 60.0, 120.0, 240.0, 480.0, 960.0};
        for (int n = 0; n <= 6; ++n) {
            c.expect(scs_khz_from_index(n) == expected[n],
                     "SCS(" + std::to_string(n) + ") is not exact");
        }
        c.expect(max_tolerable_cfo_khz(480.0) == 30.4, "CFO tolerance at 480 kHz is not 30.4");
    });

    criterion(8, "RA verdicts: RAR infeasible, resolution feasible, exact cutoff", [&](Checker& c) {
        const LinkBudgetDelay d = base.delay();
        const RaTimerAnalysis a = analyze_timers(base.ra_timers, d.two_way_ms, base.ra_processing_ms);
        c.expect(!a.rar.feasible, "the 15 ms RAR window should be infeasible");
        c.expect(a.contention_resolution.feasible,
                 "the 64 ms contention-resolution timer should be feasible");

        const DelayedLink link(d.one_way_ms, 0.0, base.seed);
        RaConfig cfg;
        cfg.mode = RaMode::contention_based;
        cfg.timers = base.ra_timers;
        cfg.processing_ms = base.ra_processing_ms;
        cfg.tx_time_ms = base.ra_tx_time_ms;
        const RaOutcome def = simulate_ra(cfg, link);
        c.expect(!def.success && def.failure_step &&
                     *def.failure_step == RaFailure::rar_expiry,
                 "the default window must fail at rar_expiry");

        const double min_window =
            min_rar_window_ms(2.0 * link.one_way_delay_ms(), base.ra_processing_ms);
        RaConfig wide = cfg;
        wide.timers = RaTimers{min_window, 64.0, true};
        c.expect(simulate_ra(wide, link).success, "window = min_rar_window must succeed");

        auto succeeds = [&](Tick ticks) {
            RaConfig probe = cfg;
            probe.timers = RaTimers{ticks_to_ms(ticks), 64.0, true};
            return simulate_ra(probe, link).success;
        };
        Tick lo = 1, hi = ms_to_ticks(80.0);
        while (hi - lo > 1) {
            const Tick mid = (lo + hi) / 2;
            if (succeeds(mid)) hi = mid; else lo = mid;
        }
        c.expect(hi == ms_to_ticks(min_window),
                 "simulated cutoff " + format_number(ticks_to_ms(hi)) +
                     " ms != min_rar_window " + format_number(min_window) + " ms");
    });

    criterion(9, "HARQ dimensioning: 59 processes, 3/6 DCI bits, 59/8 buffer ratio",
              [&](Checker& c) {
        c.expect(min_processes(51.0, 8.0, 1.0) == 59, "min_processes(51, 8, 1) != 59");
        c.expect(dci_process_bits(8) == 3, "dci_process_bits(8) != 3");
        c.expect(dci_process_bits(59) == 6, "dci_process_bits(59) != 6");
        const nlohmann::json dim = harq_dim_json(base);
        c.expect(dim["n_min_paper_rounding"] == 59, "reported n_min (paper rounding) != 59");
        c.expect(dim["n_min_exact"] == 60, "reported n_min (exact delay) != 60");
        c.expect(dim["buffer_ratio_vs_lte"] == 7.375, "buffer ratio != 59/8");
    });

    criterion(10, "HARQ throughput law: |util - min(1, n/59)| <= 0.02", [&](Checker& c) {
        const DelayedLink link(25.5, 0.0, 1);  // rtt 51 ms as in the dimensioning
        HarqConfig cfg;
        for (int n : {1, 8, 16, 59, 64}) {
            cfg.n_processes = n;
            const HarqStats st = simulate_harq(cfg, link, 0.0, 10000.0, base.seed);
            const double expected = oracles::analytic_utilization(n, 1.0, 51.0, 8.0);
            c.expect(std::abs(st.utilization - expected) <= 0.02,
                     "n=" + std::to_string(n) + ": utilization " +
                         format_number(st.utilization) + " vs analytic " +
                         format_number(expected));
            if (n == 8) {
                c.expect(std::abs(st.utilization - 0.136) <= 0.02,
                         "LTE-default shortfall is not ~0.136");
            }
        }
    });

    criterion(11, "2-bit ACK never retransmits more than 1-bit (10 seeds x 3 error rates)",
              [&](Checker& c) {
        const DelayedLink link(25.5, 0.0, 1);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            for (double err : {0.05, 0.1, 0.2}) {
                HarqConfig one;
                one.ack_mode = AckMode::one_bit;
                HarqConfig two;
                two.ack_mode = AckMode::two_bit;
                const auto a = simulate_harq(one, link, err, 10000.0, seed);
                const auto b = simulate_harq(two, link, err, 10000.0, seed);
                c.expect(b.retransmissions <= a.retransmissions,
                         "seed " + std::to_string(seed) + ", error " + format_number(err) +
                             ": two-bit " + std::to_string(b.retransmissions) +
                             " > one-bit " + std::to_string(a.retransmissions));
            }
        }
    });

    criterion(12, "determinism: byte-identical artifacts across two runs", [&](Checker& c) {
        const Scenario s1;
        const Scenario s2;
        c.expect(report_json(s1).dump(2) == report_json(s2).dump(2),
                 "report JSON differs between runs");
        c.expect(residual_sweep_csv(s1) == residual_sweep_csv(s2), "sweep CSV differs");
        c.expect(ra_json(s1).dump(2) == ra_json(s2).dump(2), "RA JSON differs");
        c.expect(strategy_table_csv(s1) == strategy_table_csv(s2), "strategy CSV differs");
        c.expect(report_text(s1) == report_text(s2), "text report differs");
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
