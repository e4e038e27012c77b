// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#include "ntnlab/event_sim.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ntnlab {

Tick ms_to_ticks(double ms) {
    if (!std::isfinite(ms)) {
        throw std::invalid_argument("time must be finite");
    }
    return std::llround(ms * static_cast<double>(kTicksPerMs));
}

double ticks_to_ms(Tick ticks) {
    return static_cast<double>(ticks) / static_cast<double>(kTicksPerMs);
}

EventEngine::Handle EventEngine::schedule(double fire_ms, std::string actor,
                                          std::string kind,
                                          std::function<void()> action) {
    return schedule_ticks(ms_to_ticks(fire_ms), std::move(actor), std::move(kind),
                          std::move(action));
}

EventEngine::Handle EventEngine::schedule_ticks(Tick fire_ticks, std::string actor,
                                                std::string kind,
                                                std::function<void()> action) {
    if (fire_ticks < now_) {
        throw std::invalid_argument("cannot schedule an event in the past");
    }
    const Handle id = next_id_++;
    live_.insert(id);
    queue_.push(Pending{fire_ticks, id, std::move(actor), std::move(kind), std::move(action)});
    return id;
}

bool EventEngine::cancel(Handle handle) { return live_.erase(handle) > 0; }

void EventEngine::fire_next() {
    Pending ev = queue_.top();
    queue_.pop();
    now_ = ev.when;
    live_.erase(ev.id);
    if (record_trace_) {
        trace_.push_back(TraceRecord{ev.when, ev.id, ev.actor, ev.kind});
    }
    if (ev.action) ev.action();
}

std::size_t EventEngine::run_until(double t_ms) {
    const Tick limit = ms_to_ticks(t_ms);
    std::size_t fired = 0;
    while (!queue_.empty()) {
        if (live_.find(queue_.top().id) == live_.end()) {
            queue_.pop();  // cancelled
            continue;
        }
        if (queue_.top().when > limit) break;
        fire_next();
        ++fired;
    }
    return fired;
}

std::size_t EventEngine::run_all() {
    std::size_t fired = 0;
    while (!queue_.empty()) {
        if (live_.find(queue_.top().id) == live_.end()) {
            queue_.pop();
            continue;
        }
        fire_next();
        ++fired;
    }
    return fired;
}

std::uint64_t EventEngine::trace_digest() const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV offset basis
    auto mix = [&h](const char* data, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            h ^= static_cast<unsigned char>(data[i]);
            h *= 1099511628211ULL;
        }
    };
    for (const auto& rec : trace_) {
        mix(reinterpret_cast<const char*>(&rec.when), sizeof(rec.when));
        mix(rec.actor.data(), rec.actor.size());
        mix(rec.kind.data(), rec.kind.size());
    }
    return h;
}

DelayedLink::DelayedLink(double one_way_delay_ms, double loss_probability,
                         std::uint64_t seed)
    : delay_ticks_(ms_to_ticks(one_way_delay_ms)),
      loss_probability_(loss_probability),
      seed_(seed),
      rng_(seed) {
    if (delay_ticks_ < 0) {
        throw std::invalid_argument("link delay must be non-negative");
    }
    if (!(loss_probability >= 0.0 && loss_probability <= 1.0)) {
        throw std::invalid_argument("loss probability must be in [0, 1]");
    }
}

DelayedLink::SendOutcome DelayedLink::send(EventEngine& engine, double at_ms,
                                           const std::string& actor,
                                           const std::string& kind,
                                           std::function<void()> on_delivery) {
    const Tick at = ms_to_ticks(at_ms);
    if (at < engine.now_ticks()) {
        throw std::invalid_argument("cannot send before the current simulation time");
    }
    ++sent_;
    const double draw = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    if (draw < loss_probability_) {
        ++lost_;
        return {false, 0.0};
    }
    const Tick delivery = at + delay_ticks_;
    engine.schedule_ticks(delivery, actor, kind,
                          [this, fn = std::move(on_delivery)]() {
                              ++delivered_;
                              if (fn) fn();
                          });
    return {true, ticks_to_ms(delivery)};
}

}  // namespace ntnlab
