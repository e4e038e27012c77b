// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#include "ntnlab/random_access.hpp"

#include <stdexcept>

namespace ntnlab {

void RaTimers::validate() const {
    if (!(rar_window_ms > 0.0)) {
        throw std::invalid_argument("ra.rar_window_ms must be positive");
    }
    if (!(contention_resolution_ms > 0.0)) {
        throw std::invalid_argument("ra.contention_resolution_ms must be positive");
    }
    if (!extended) {
        if (rar_window_ms > 15.0) {
            throw std::invalid_argument(
                "ra.rar_window_ms exceeds the 15 ms standard cap (set ra.extended to lift it)");
        }
        if (contention_resolution_ms > 64.0) {
            throw std::invalid_argument(
                "ra.contention_resolution_ms exceeds the 64 ms standard cap (set ra.extended to lift it)");
        }
    }
}

std::string to_string(RaMode mode) {
    switch (mode) {
        case RaMode::contention_based: return "contention_based";
        case RaMode::contention_free: return "contention_free";
        case RaMode::adhoc_deployment: return "adhoc_deployment";
    }
    return "contention_based";
}

RaMode ra_mode_from_string(const std::string& s) {
    if (s == "contention_based") return RaMode::contention_based;
    if (s == "contention_free") return RaMode::contention_free;
    if (s == "adhoc_deployment") return RaMode::adhoc_deployment;
    throw std::invalid_argument("unknown RA mode '" + s + "'");
}

std::string to_string(RaFailure f) {
    return f == RaFailure::rar_expiry ? "rar_expiry" : "contention_resolution_expiry";
}

RaTimerAnalysis analyze_timers(const RaTimers& timers, double two_way_delay_ms,
                               double processing_ms) {
    timers.validate();
    if (!(two_way_delay_ms >= 0.0) || !(processing_ms >= 0.0)) {
        throw std::invalid_argument("delays must be non-negative");
    }
    const double required = two_way_delay_ms + processing_ms;
    RaTimerAnalysis analysis;
    analysis.rar = {timers.rar_window_ms, required, timers.rar_window_ms >= required};
    analysis.contention_resolution = {timers.contention_resolution_ms, required,
                                      timers.contention_resolution_ms >= required};
    return analysis;
}

double min_rar_window_ms(double two_way_delay_ms, double processing_ms) {
    if (!(two_way_delay_ms >= 0.0) || !(processing_ms >= 0.0)) {
        throw std::invalid_argument("delays must be non-negative");
    }
    return two_way_delay_ms + processing_ms;
}

RaOutcome simulate_ra(const RaConfig& config, DelayedLink link) {
    config.timers.validate();
    if (!(config.processing_ms >= 0.0) || !(config.tx_time_ms >= 0.0)) {
        throw std::invalid_argument("ra processing and tx times must be non-negative");
    }

    RaOutcome out;
    out.timing_advance_ms = config.timing_advance_ms;

    if (config.mode == RaMode::adhoc_deployment) {
        // Orbits and ground positions are known, so the node comes up with a
        // preconfigured timing advance and skips the over-the-air procedure.
        out.success = true;
        out.completion_time_ms = 0.0;
        return out;
    }

    EventEngine engine;
    const Tick tx = ms_to_ticks(config.tx_time_ms);
    const Tick proc = ms_to_ticks(config.processing_ms);
    const Tick msg1_end = tx;  // Msg1 transmission occupies [0, tx)
    const Tick rar_deadline = msg1_end + ms_to_ticks(config.timers.rar_window_ms);
    const Tick cr_window = ms_to_ticks(config.timers.contention_resolution_ms);

    bool finished = false;
    Tick cr_start = 0;
    bool msg3_sent = false;

    auto finish_success = [&](Tick at) {
        finished = true;
        out.success = true;
        out.completion_time_ms = ticks_to_ms(at);
    };
    auto finish_failure = [&](RaFailure why, Tick at) {
        finished = true;
        out.success = false;
        out.failure_step = why;
        out.completion_time_ms = ticks_to_ms(at);
    };
    auto record = [&](const std::string& label, Tick sent,
                      const DelayedLink::SendOutcome& s) {
        out.timeline.push_back({label, ticks_to_ms(sent), s.delivered,
                                s.delivered ? s.delivery_ms : 0.0});
    };

    // Step 4: contention resolution arrives at the UE.
    auto on_msg4_rx = [&]() {
        if (finished) return;
        if (engine.now_ticks() <= cr_start + cr_window) {
            finish_success(engine.now_ticks());
        } else {
            finish_failure(RaFailure::contention_resolution_expiry, cr_start + cr_window);
        }
    };

    // Step 3 received by the network; Msg4 goes back after processing.
    auto on_msg3_rx = [&]() {
        if (finished) return;
        const Tick reply_at = engine.now_ticks() + proc;
        engine.schedule_ticks(reply_at, "gnb", "msg4_tx", [&]() {
            auto s = link.send(engine, engine.now_ms(), "ue", "msg4_rx", on_msg4_rx);
            record("Msg4", engine.now_ticks(), s);
        });
    };

    // Step 2: RAR arrives at the UE; the window verdict is a plain time
    // comparison so an arrival exactly at the deadline still counts.
    auto on_rar_rx = [&]() {
        if (finished) return;
        if (engine.now_ticks() > rar_deadline) {
            finish_failure(RaFailure::rar_expiry, rar_deadline);
            return;
        }
        if (config.mode == RaMode::contention_free) {
            finish_success(engine.now_ticks());
            return;
        }
        const Tick msg3_end = engine.now_ticks() + proc + tx;
        engine.schedule_ticks(msg3_end, "ue", "msg3_tx_end", [&, msg3_end]() {
            msg3_sent = true;
            cr_start = msg3_end;  // contention-resolution timer starts here
            auto s = link.send(engine, engine.now_ms(), "gnb", "msg3_rx", on_msg3_rx);
            record("Msg3", msg3_end, s);
        });
    };

    // Step 1 received by the network; the RAR goes back after processing
    // (the response transmission time is folded into the processing constant).
    auto on_msg1_rx = [&]() {
        if (finished) return;
        const Tick reply_at = engine.now_ticks() + proc;
        engine.schedule_ticks(reply_at, "gnb", "rar_tx", [&]() {
            auto s = link.send(engine, engine.now_ms(), "ue", "rar_rx", on_rar_rx);
            record("Msg2(RAR)", engine.now_ticks(), s);
        });
    };

    engine.schedule_ticks(msg1_end, "ue", "msg1_tx_end", [&]() {
        auto s = link.send(engine, engine.now_ms(), "gnb", "msg1_rx", on_msg1_rx);
        record("Msg1", msg1_end, s);
    });

    engine.run_all();

    // A lost or never-sent response leaves the run unfinished: the pending
    // timer expires.
    if (!finished) {
        if (msg3_sent) {
            finish_failure(RaFailure::contention_resolution_expiry, cr_start + cr_window);
        } else {
            finish_failure(RaFailure::rar_expiry, rar_deadline);
        }
    }

    out.messages_over_air = link.sent_count();
    out.trace = engine.trace();
    return out;
}

double timing_advance_from_geometry_ms(double elev_user_deg, double elev_gateway_deg,
                                       const OrbitConfig& orbit, const EarthModel& earth) {
    return delay_budget(elev_user_deg, elev_gateway_deg, orbit, earth).two_way_ms;
}

}  // namespace ntnlab
