// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NTNLAB_HARQ_HPP
#define NTNLAB_HARQ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ntnlab/event_sim.hpp"

namespace ntnlab {

enum class AckMode { one_bit, two_bit, disabled };

std::string to_string(AckMode mode);
AckMode ack_mode_from_string(const std::string& s);

/// Incremental-redundancy stand-in: a transport block decodes once it has
/// accumulated `required_redundancy` units. A failed first transmission
/// leaves a deficit of 1..required-1 units. One-bit feedback only says NACK,
/// so every retransmission carries `one_bit_increment` units; two-bit
/// feedback tells the transmitter how close the packet is, so the
/// retransmission carries the increment matched to the remaining need.
struct RedundancyModel {
    int required_redundancy = 4;
    int one_bit_increment = 1;
    std::vector<int> two_bit_increments = {1, 2, 3};  // indexed by remaining - 1

    void validate() const;
};

struct HarqConfig {
    int n_processes = 59;
    double tti_ms = 1.0;
    double ack_window_ms = 8.0;
    AckMode ack_mode = AckMode::one_bit;
    int max_transmissions = 8;
    double per_tti_soft_bits = 1.0;  // soft-buffer proportionality constant
    RedundancyModel redundancy{};

    void validate() const;
};

struct HarqStats {
    std::int64_t offered = 0;        // transport blocks started
    std::int64_t delivered = 0;      // decoded and acknowledged
    std::int64_t retransmissions = 0;
    std::int64_t abandoned = 0;      // hit max_transmissions undecoded
    std::int64_t undecoded_losses = 0;  // disabled mode only
    std::int64_t pending = 0;        // still in flight at the horizon
    std::int64_t busy_ttis = 0;      // within the measurement window
    std::int64_t window_ttis = 0;
    double utilization = 0.0;
    double peak_buffer = 0.0;        // size units, n_occupied * tti * per_tti_soft_bits
    int dci_process_bits = 0;

    bool operator==(const HarqStats&) const = default;
};

/// ceil((rtt + ack_window) / tti), at least 1. The pipeline needs this many
/// parallel stop-and-wait processes to keep the link busy.
int min_processes(double rtt_ms, double ack_window_ms, double tti_ms);

/// Bit width of the DCI process-identifier field, ceil(log2(n)), minimum 1.
int dci_process_bits(int n_processes);

/// Soft-buffer requirement, proportional to n_processes * TTI.
double buffer_requirement(int n_processes, double tti_ms, double per_tti_soft_bits);

/// Slot-driven simulation of n parallel stop-and-wait processes over a link
/// with RTT = 2 * one_way_delay. One transport block per TTI; a process
/// blocks from transmission until its feedback arrives rtt + ack_window
/// later. Per-transmission decode errors are drawn from a counter-based
/// stream keyed by (seed, process, packet, attempt), which keeps feedback
/// modes comparable under a shared seed. The link is used as a pure delay
/// element here. Utilization is measured after a 2*(rtt+ack) warmup.
HarqStats simulate_harq(const HarqConfig& config, const DelayedLink& link,
                        double error_prob, double duration_ms, std::uint64_t seed);

struct StrategyRow {
    std::string strategy;
    HarqConfig config;
    HarqStats stats;
    double buffer_requirement = 0.0;
};

/// The four mitigation options side by side: (i) full process count with the
/// enlarged buffer, (ii) full count with 2-bit feedback, (iii) a reduced
/// process count, (iv) no HARQ.
std::vector<StrategyRow> compare_strategies(const DelayedLink& link, double error_prob,
                                            double duration_ms, std::uint64_t seed,
                                            int full_processes = 59,
                                            int reduced_processes = 16,
                                            const HarqConfig& base = {});

}  // namespace ntnlab

#endif  // NTNLAB_HARQ_HPP
