// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NTNLAB_RANDOM_ACCESS_HPP
#define NTNLAB_RANDOM_ACCESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ntnlab/event_sim.hpp"
#include "ntnlab/geometry.hpp"

namespace ntnlab {

/// Random Access timer configuration. The standard caps (15 ms RAR window,
/// 64 ms contention resolution) are enforced unless `extended` is set.
struct RaTimers {
    double rar_window_ms = 15.0;
    double contention_resolution_ms = 64.0;
    bool extended = false;

    void validate() const;
};

enum class RaMode { contention_based, contention_free, adhoc_deployment };

std::string to_string(RaMode mode);
RaMode ra_mode_from_string(const std::string& s);

enum class RaFailure { rar_expiry, contention_resolution_expiry };

std::string to_string(RaFailure f);

struct RaMessageRecord {
    std::string label;
    double sent_ms = 0.0;
    bool delivered = false;
    double arrival_ms = 0.0;  // meaningful only when delivered
};

struct RaOutcome {
    bool success = false;
    std::optional<RaFailure> failure_step;
    double completion_time_ms = 0.0;
    double timing_advance_ms = 0.0;
    std::size_t messages_over_air = 0;
    std::vector<RaMessageRecord> timeline;
    std::vector<TraceRecord> trace;
};

struct TimerFeasibility {
    double timer_ms = 0.0;
    double required_ms = 0.0;
    bool feasible = false;
};

struct RaTimerAnalysis {
    TimerFeasibility rar;
    TimerFeasibility contention_resolution;
};

/// Compares each timer against the wait it has to cover: the two-way delay
/// plus the peer's processing time.
RaTimerAnalysis analyze_timers(const RaTimers& timers, double two_way_delay_ms,
                               double processing_ms = 1.0);

/// Smallest RAR window that can see the response: two-way delay + processing.
double min_rar_window_ms(double two_way_delay_ms, double processing_ms);

struct RaConfig {
    RaMode mode = RaMode::contention_based;
    RaTimers timers{};
    double processing_ms = 1.0;  // per node action; response tx time folded in
    double tx_time_ms = 1.0;     // uplink message transmission time (one TTI)
    double timing_advance_ms = 0.0;  // preconfigured value used by adhoc mode
};

/// Event-driven execution of the 4-step contention-based procedure (or its
/// 2-step contention-free prefix). Timer verdicts compare arrival instants
/// against window deadlines in tick space, so the success/failure cutoff is
/// exact. The ad hoc deployment mode succeeds immediately with the
/// preconfigured timing advance and no over-the-air messages. Timer
/// expiries are outcomes, not errors.
RaOutcome simulate_ra(const RaConfig& config, DelayedLink link);

/// Two-way delay from known geometry, used as the ad hoc mode's
/// preconfigured timing advance.
double timing_advance_from_geometry_ms(double elev_user_deg, double elev_gateway_deg,
                                       const OrbitConfig& orbit, const EarthModel& earth);

}  // namespace ntnlab

#endif  // NTNLAB_RANDOM_ACCESS_HPP
