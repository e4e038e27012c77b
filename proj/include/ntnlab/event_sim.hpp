// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NTNLAB_EVENT_SIM_HPP
#define NTNLAB_EVENT_SIM_HPP

#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

namespace ntnlab {

/// Simulation time in integer microseconds; all public interfaces speak
/// milliseconds. Integer ticks keep repeated timer arithmetic drift free.
using Tick = std::int64_t;

inline constexpr Tick kTicksPerMs = 1000;

Tick ms_to_ticks(double ms);
double ticks_to_ms(Tick ticks);

struct TraceRecord {
    Tick when;
    std::uint64_t sequence;
    std::string actor;
    std::string kind;

    bool operator==(const TraceRecord&) const = default;
};

/// Deterministic discrete-event engine. Events fire in (fire_time, sequence)
/// order, the sequence being assigned at scheduling time, so equal-time
/// events fire in scheduling order. One engine instance is single threaded.
class EventEngine {
  public:
    using Handle = std::uint64_t;

    explicit EventEngine(bool record_trace = true) : record_trace_(record_trace) {}

    /// Schedules an action; scheduling in the past throws std::invalid_argument.
    Handle schedule(double fire_ms, std::string actor, std::string kind,
                    std::function<void()> action);
    Handle schedule_ticks(Tick fire_ticks, std::string actor, std::string kind,
                          std::function<void()> action);

    /// True when the handle was still pending; false for fired, cancelled or
    /// unknown handles.
    bool cancel(Handle handle);

    /// Fires every event with fire_time <= t_ms; returns the number fired.
    std::size_t run_until(double t_ms);

    /// Runs to quiescence.
    std::size_t run_all();

    double now_ms() const { return ticks_to_ms(now_); }
    Tick now_ticks() const { return now_; }
    bool empty() const { return live_.empty(); }

    const std::vector<TraceRecord>& trace() const { return trace_; }

    /// FNV-1a digest of the fired-event trace; equal digests across runs are
    /// the determinism check.
    std::uint64_t trace_digest() const;

  private:
    struct Pending {
        Tick when;
        Handle id;
        std::string actor;
        std::string kind;
        std::function<void()> action;
    };
    struct Later {
        bool operator()(const Pending& a, const Pending& b) const {
            if (a.when != b.when) return a.when > b.when;
            return a.id > b.id;
        }
    };

    void fire_next();

    std::priority_queue<Pending, std::vector<Pending>, Later> queue_;
    std::unordered_set<Handle> live_;
    std::vector<TraceRecord> trace_;
    Tick now_ = 0;
    Handle next_id_ = 1;
    bool record_trace_ = true;
};

/// Fixed-delay lossy channel: delivery time = send time + one_way_delay
/// exactly (quantized to ticks once, at construction); losses come from a
/// seeded generator, drawn once per send in send order.
class DelayedLink {
  public:
    explicit DelayedLink(double one_way_delay_ms, double loss_probability = 0.0,
                         std::uint64_t seed = 0);

    double one_way_delay_ms() const { return ticks_to_ms(delay_ticks_); }
    Tick one_way_delay_ticks() const { return delay_ticks_; }
    double loss_probability() const { return loss_probability_; }
    std::uint64_t seed() const { return seed_; }

    struct SendOutcome {
        bool delivered;
        double delivery_ms;  // meaningful only when delivered
    };

    /// Draws the loss verdict now; on survival schedules `on_delivery` at
    /// at_ms + one_way_delay. Sending before the engine's current time throws.
    SendOutcome send(EventEngine& engine, double at_ms, const std::string& actor,
                     const std::string& kind, std::function<void()> on_delivery);

    std::size_t sent_count() const { return sent_; }
    std::size_t delivered_count() const { return delivered_; }
    std::size_t lost_count() const { return lost_; }

  private:
    Tick delay_ticks_;
    double loss_probability_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    std::size_t sent_ = 0;
    std::size_t delivered_ = 0;
    std::size_t lost_ = 0;
};

}  // namespace ntnlab

#endif  // NTNLAB_EVENT_SIM_HPP
