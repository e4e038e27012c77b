// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#include "ntnlab/harq.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace ntnlab {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based uniform draw in [0, 1): a pure function of its key, so the
// outcome of attempt j of packet i on process k does not depend on how other
// processes interleave.
double keyed_draw(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = splitmix(seed);
    h = splitmix(h ^ (a * 0x9e3779b97f4a7c15ULL));
    h = splitmix(h ^ (b * 0xc2b2ae3d27d4eb4fULL));
    h = splitmix(h ^ (c * 0x165667b19e3779f9ULL));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double attempt_draw(std::uint64_t seed, int process, std::int64_t packet, int attempt) {
    return keyed_draw(seed, static_cast<std::uint64_t>(process) + 1,
                      static_cast<std::uint64_t>(packet) + 1,
                      static_cast<std::uint64_t>(attempt) + 1);
}

int deficit_draw(std::uint64_t seed, int process, std::int64_t packet, int levels) {
    const double u = keyed_draw(seed, static_cast<std::uint64_t>(process) + 1,
                                static_cast<std::uint64_t>(packet) + 1, 0);
    return 1 + std::min(levels - 1, static_cast<int>(u * levels));
}

}  // namespace

std::string to_string(AckMode mode) {
    switch (mode) {
        case AckMode::one_bit: return "one_bit";
        case AckMode::two_bit: return "two_bit";
        case AckMode::disabled: return "disabled";
    }
    return "one_bit";
}

AckMode ack_mode_from_string(const std::string& s) {
    if (s == "one_bit") return AckMode::one_bit;
    if (s == "two_bit") return AckMode::two_bit;
    if (s == "disabled") return AckMode::disabled;
    throw std::invalid_argument("unknown ACK mode '" + s + "'");
}

void RedundancyModel::validate() const {
    // At least one NACK level must exist between "nothing" and "decoded".
    if (required_redundancy < 2) {
        throw std::invalid_argument("harq.required_redundancy must be at least 2");
    }
    if (one_bit_increment < 1) {
        throw std::invalid_argument("harq redundancy one_bit_increment must be at least 1");
    }
    if (static_cast<int>(two_bit_increments.size()) != required_redundancy - 1) {
        throw std::invalid_argument(
            "harq redundancy two_bit_increments must have required_redundancy - 1 levels");
    }
    int prev = 0;
    for (int inc : two_bit_increments) {
        if (inc < 1) {
            throw std::invalid_argument("harq redundancy increments must be positive");
        }
        if (inc < prev) {
            throw std::invalid_argument(
                "harq redundancy increments must be non-decreasing in the remaining need");
        }
        prev = inc;
    }
}

void HarqConfig::validate() const {
    if (n_processes < 1) {
        throw std::invalid_argument("harq.n_processes must be at least 1");
    }
    if (!(tti_ms > 0.0)) {
        throw std::invalid_argument("harq.tti_ms must be positive");
    }
    if (!(ack_window_ms >= 0.0)) {
        throw std::invalid_argument("harq.ack_window_ms must be non-negative");
    }
    if (max_transmissions < 1) {
        throw std::invalid_argument("harq.max_transmissions must be at least 1");
    }
    if (!(per_tti_soft_bits > 0.0)) {
        throw std::invalid_argument("harq.per_tti_soft_bits must be positive");
    }
    redundancy.validate();
}

int min_processes(double rtt_ms, double ack_window_ms, double tti_ms) {
    if (!(tti_ms > 0.0)) {
        throw std::invalid_argument("tti must be positive");
    }
    if (!(rtt_ms >= 0.0) || !(ack_window_ms >= 0.0)) {
        throw std::invalid_argument("rtt and ack window must be non-negative");
    }
    const int n = static_cast<int>(std::ceil((rtt_ms + ack_window_ms) / tti_ms));
    return std::max(n, 1);
}

int dci_process_bits(int n_processes) {
    if (n_processes < 1) {
        throw std::invalid_argument("process count must be at least 1");
    }
    int bits = 0;
    while ((1 << bits) < n_processes) ++bits;
    return std::max(bits, 1);
}

double buffer_requirement(int n_processes, double tti_ms, double per_tti_soft_bits) {
    if (n_processes < 1 || !(tti_ms > 0.0) || !(per_tti_soft_bits > 0.0)) {
        throw std::invalid_argument("buffer requirement needs positive inputs");
    }
    return static_cast<double>(n_processes) * tti_ms * per_tti_soft_bits;
}

namespace {

struct ProcessState {
    bool occupied = false;     // holds an undecoded transport block
    bool pending_retx = false; // NACKed, waiting for a slot
    std::int64_t packet = -1;  // per-process packet index
    int attempts = 0;          // transmissions of the current block
    int remaining = 0;         // redundancy units still needed
};

}  // namespace

HarqStats simulate_harq(const HarqConfig& config, const DelayedLink& link,
                        double error_prob, double duration_ms, std::uint64_t seed) {
    config.validate();
    if (!(error_prob >= 0.0 && error_prob <= 1.0)) {
        throw std::invalid_argument("error probability must be in [0, 1]");
    }
    const Tick rtt = 2 * link.one_way_delay_ticks();
    const Tick duration = ms_to_ticks(duration_ms);
    if (duration < rtt) {
        throw std::invalid_argument("duration must cover at least one round trip");
    }

    const Tick slot = ms_to_ticks(config.tti_ms);
    const Tick feedback_latency = rtt + ms_to_ticks(config.ack_window_ms);
    Tick warm_end = 2 * feedback_latency;
    if (warm_end > duration / 2) warm_end = duration / 2;

    HarqStats stats;
    stats.dci_process_bits = dci_process_bits(config.n_processes);

    EventEngine engine(/*record_trace=*/false);
    std::vector<ProcessState> procs(static_cast<std::size_t>(config.n_processes));
    std::deque<int> ready;
    for (int k = 0; k < config.n_processes; ++k) ready.push_back(k);

    int occupied_count = 0;
    int peak_occupied = 0;
    std::int64_t disabled_packet = 0;

    auto on_feedback = [&](int k) {
        ProcessState& p = procs[static_cast<std::size_t>(k)];
        const double u = attempt_draw(seed, k, p.packet, p.attempts);
        const bool tx_ok = u >= error_prob;
        bool decoded = false;
        if (p.attempts == 1) {
            if (tx_ok) {
                decoded = true;
            } else {
                p.remaining = deficit_draw(seed, k, p.packet,
                                           config.redundancy.required_redundancy - 1);
            }
        } else if (tx_ok) {
            const int inc =
                config.ack_mode == AckMode::two_bit
                    ? config.redundancy.two_bit_increments[static_cast<std::size_t>(p.remaining - 1)]
                    : config.redundancy.one_bit_increment;
            p.remaining -= inc;
            decoded = p.remaining <= 0;
        }
        if (decoded) {
            ++stats.delivered;
        } else if (p.attempts >= config.max_transmissions) {
            ++stats.abandoned;
        } else {
            p.pending_retx = true;
            ready.push_back(k);
            return;
        }
        p.occupied = false;
        p.pending_retx = false;
        --occupied_count;
        ready.push_back(k);
    };

    std::function<void(Tick)> do_slot = [&](Tick t) {
        const bool in_window = t >= warm_end && t < duration;
        if (in_window) ++stats.window_ttis;

        if (config.ack_mode == AckMode::disabled) {
            // Fire-and-forget: one fresh block per TTI, undecoded blocks are
            // losses. Only one block ever occupies the buffer.
            ++stats.offered;
            if (in_window) ++stats.busy_ttis;
            peak_occupied = std::max(peak_occupied, 1);
            const bool ok = attempt_draw(seed, 0, disabled_packet++, 1) >= error_prob;
            if (ok) ++stats.delivered; else ++stats.undecoded_losses;
        } else if (!ready.empty()) {
            const int k = ready.front();
            ready.pop_front();
            ProcessState& p = procs[static_cast<std::size_t>(k)];
            if (!p.occupied) {
                p.occupied = true;
                ++p.packet;
                p.attempts = 0;
                p.remaining = 0;
                ++stats.offered;
                ++occupied_count;
                peak_occupied = std::max(peak_occupied, occupied_count);
            } else {
                p.pending_retx = false;
                ++stats.retransmissions;
            }
            ++p.attempts;
            if (in_window) ++stats.busy_ttis;
            engine.schedule_ticks(t + feedback_latency, "rx", "feedback",
                                  [&, k]() { on_feedback(k); });
        }

        const Tick next = t + slot;
        if (next < duration) {
            engine.schedule_ticks(next, "tx", "slot", [&, next]() { do_slot(next); });
        }
    };

    engine.schedule_ticks(0, "tx", "slot", [&]() { do_slot(0); });
    engine.run_until(ticks_to_ms(duration));

    if (config.ack_mode != AckMode::disabled) {
        stats.pending = occupied_count;
    }
    stats.peak_buffer = static_cast<double>(peak_occupied) * config.tti_ms *
                        config.per_tti_soft_bits;
    stats.utilization =
        stats.window_ttis > 0
            ? static_cast<double>(stats.busy_ttis) / static_cast<double>(stats.window_ttis)
            : 0.0;
    return stats;
}

std::vector<StrategyRow> compare_strategies(const DelayedLink& link, double error_prob,
                                            double duration_ms, std::uint64_t seed,
                                            int full_processes, int reduced_processes,
                                            const HarqConfig& base) {
    std::vector<StrategyRow> rows;
    auto run = [&](const std::string& name, int n, AckMode mode) {
        HarqConfig cfg = base;
        cfg.n_processes = n;
        cfg.ack_mode = mode;
        StrategyRow row{name, cfg, simulate_harq(cfg, link, error_prob, duration_ms, seed),
                        buffer_requirement(n, cfg.tti_ms, cfg.per_tti_soft_bits)};
        rows.push_back(std::move(row));
    };
    run("i_full_buffer", full_processes, AckMode::one_bit);
    run("ii_two_bit_ack", full_processes, AckMode::two_bit);
    run("iii_reduced_processes", reduced_processes, AckMode::one_bit);
    run("iv_no_harq", 1, AckMode::disabled);
    return rows;
}

}  // namespace ntnlab
