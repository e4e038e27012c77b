// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NTNLAB_SCENARIO_HPP
#define NTNLAB_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ntnlab/doppler.hpp"
#include "ntnlab/geometry.hpp"
#include "ntnlab/harq.hpp"
#include "ntnlab/numerology.hpp"
#include "ntnlab/random_access.hpp"

namespace ntnlab {

/// Full experiment configuration. Defaults reproduce the reference scenario:
/// a transparent satellite at 1500 km serving a 10 degree user leg and a
/// 5 degree gateway leg in Ka band (20 GHz down, 30 GHz up).
///
/// Scenario files are flat JSON objects with dotted key paths mirroring the
/// module names (e.g. "geometry.altitude_km", "harq.tti_ms").
struct Scenario {
    EarthModel earth{};
    OrbitConfig orbit{};
    double elevation_user_deg = 10.0;
    double elevation_gateway_deg = 5.0;

    double downlink_hz = 20e9;
    double uplink_hz = 30e9;
    double terrestrial_speed_km_h = 500.0;
    double terrestrial_carrier_hz = 4e9;
    double min_elevation_deg = 0.0;  // horizon, for the max-Doppler envelope
    std::vector<double> sweep_elevations_deg = {10.0, 45.0, 80.0, 90.0};
    std::vector<double> sweep_errors_km = default_sweep_errors();

    int numerology_index = 5;
    CfoTolerancePolicy cfo_policy{};

    RaMode ra_mode = RaMode::contention_based;
    RaTimers ra_timers{};
    double ra_processing_ms = 1.0;
    double ra_tx_time_ms = 1.0;
    double ra_loss_probability = 0.0;

    HarqConfig harq{};
    int harq_n_processes_override = 0;  // 0 = dimension from the scenario RTT
    double harq_error_prob = 0.1;
    double harq_duration_ms = 10000.0;
    int harq_reduced_processes = 16;

    std::uint64_t seed = 1;

    static std::vector<double> default_sweep_errors();  // 0..10 km step 0.5

    void validate() const;  // throws std::invalid_argument with the field path

    CarrierConfig downlink() const { return CarrierConfig::downlink(downlink_hz); }
    CarrierConfig uplink() const { return CarrierConfig::uplink(uplink_hz); }

    LinkBudgetDelay delay() const;
    /// Paper-style whole-millisecond RTT used for the headline dimensioning.
    double two_way_rounded_ms() const;
    /// HARQ config with the process count resolved (override or dimensioned).
    HarqConfig resolved_harq() const;

    nlohmann::json to_json() const;
    static Scenario from_json(const nlohmann::json& j);
    static Scenario load_file(const std::string& path);
};

}  // namespace ntnlab

#endif  // NTNLAB_SCENARIO_HPP
