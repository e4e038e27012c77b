// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#include "ntnlab/scenario.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace ntnlab {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& key, const std::string& what) {
    throw std::invalid_argument(key + ": " + what);
}

double as_number(const json& v, const std::string& key) {
    if (!v.is_number()) bad_field(key, "expected a number");
    return v.get<double>();
}

int as_int(const json& v, const std::string& key) {
    if (!v.is_number_integer()) bad_field(key, "expected an integer");
    return v.get<int>();
}

bool as_bool(const json& v, const std::string& key) {
    if (!v.is_boolean()) bad_field(key, "expected a boolean");
    return v.get<bool>();
}

std::string as_string(const json& v, const std::string& key) {
    if (!v.is_string()) bad_field(key, "expected a string");
    return v.get<std::string>();
}

std::vector<double> as_number_list(const json& v, const std::string& key) {
    if (!v.is_array() || v.empty()) bad_field(key, "expected a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number()) bad_field(key, "expected a non-empty array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<int> as_int_list(const json& v, const std::string& key) {
    if (!v.is_array()) bad_field(key, "expected an array of integers");
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_integer()) bad_field(key, "expected an array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

}  // namespace

std::vector<double> Scenario::default_sweep_errors() {
    std::vector<double> errors;
    errors.reserve(21);
    for (int i = 0; i <= 20; ++i) errors.push_back(static_cast<double>(i) * 0.5);
    return errors;
}

void Scenario::validate() const {
    if (!(earth.radius_km > 0.0)) bad_field("geometry.earth_radius_km", "must be positive");
    if (!(earth.mu_km3_s2 > 0.0)) bad_field("geometry.mu_km3_s2", "must be positive");
    if (!(earth.light_speed_km_s > 0.0)) {
        bad_field("geometry.light_speed_km_s", "must be positive");
    }
    if (!(orbit.altitude_km > 0.0)) bad_field("geometry.altitude_km", "must be positive");
    auto check_elev = [](double e, const char* key) {
        if (!(e >= 0.0 && e <= 90.0)) {
            throw std::invalid_argument(std::string(key) + ": must be in [0, 90] degrees");
        }
    };
    check_elev(elevation_user_deg, "geometry.elevation_user_deg");
    check_elev(elevation_gateway_deg, "geometry.elevation_gateway_deg");
    check_elev(min_elevation_deg, "doppler.min_elevation_deg");
    if (!(downlink_hz > 0.0)) bad_field("doppler.downlink_hz", "must be positive");
    if (!(uplink_hz > 0.0)) bad_field("doppler.uplink_hz", "must be positive");
    if (!(terrestrial_speed_km_h >= 0.0)) {
        bad_field("doppler.terrestrial_speed_km_h", "must be non-negative");
    }
    if (!(terrestrial_carrier_hz > 0.0)) {
        bad_field("doppler.terrestrial_carrier_hz", "must be positive");
    }
    if (sweep_elevations_deg.empty()) bad_field("doppler.sweep_elevations_deg", "must be non-empty");
    for (double e : sweep_elevations_deg) check_elev(e, "doppler.sweep_elevations_deg");
    if (sweep_errors_km.empty()) bad_field("doppler.sweep_errors_km", "must be non-empty");
    for (double err : sweep_errors_km) {
        if (!(err >= 0.0)) bad_field("doppler.sweep_errors_km", "entries must be non-negative");
    }
    try {
        scs_khz_from_index(numerology_index);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("numerology.index: ") + e.what());
    }
    try {
        cfo_policy.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("numerology.cfo_reference_khz: ") + e.what());
    }
    ra_timers.validate();
    if (!(ra_processing_ms >= 0.0)) bad_field("ra.processing_ms", "must be non-negative");
    if (!(ra_tx_time_ms >= 0.0)) bad_field("ra.tx_time_ms", "must be non-negative");
    if (!(ra_loss_probability >= 0.0 && ra_loss_probability <= 1.0)) {
        bad_field("ra.loss_probability", "must be in [0, 1]");
    }
    if (harq_n_processes_override < 0) bad_field("harq.n_processes", "must be non-negative");
    resolved_harq().validate();
    if (!(harq_error_prob >= 0.0 && harq_error_prob <= 1.0)) {
        bad_field("harq.error_prob", "must be in [0, 1]");
    }
    if (!(harq_duration_ms > 0.0)) bad_field("harq.duration_ms", "must be positive");
    if (harq_reduced_processes < 1) bad_field("harq.reduced_processes", "must be at least 1");
}

LinkBudgetDelay Scenario::delay() const {
    return delay_budget(elevation_user_deg, elevation_gateway_deg, orbit, earth);
}

double Scenario::two_way_rounded_ms() const {
    return std::floor(delay().two_way_ms);
}

HarqConfig Scenario::resolved_harq() const {
    HarqConfig cfg = harq;
    cfg.n_processes = harq_n_processes_override > 0
                          ? harq_n_processes_override
                          : min_processes(two_way_rounded_ms(), cfg.ack_window_ms, cfg.tti_ms);
    return cfg;
}

json Scenario::to_json() const {
    json j = json::object();
    j["seed"] = seed;
    j["geometry.earth_radius_km"] = earth.radius_km;
    j["geometry.mu_km3_s2"] = earth.mu_km3_s2;
    j["geometry.light_speed_km_s"] = earth.light_speed_km_s;
    j["geometry.altitude_km"] = orbit.altitude_km;
    j["geometry.payload_mode"] = to_string(orbit.payload);
    j["geometry.elevation_user_deg"] = elevation_user_deg;
    j["geometry.elevation_gateway_deg"] = elevation_gateway_deg;
    j["doppler.downlink_hz"] = downlink_hz;
    j["doppler.uplink_hz"] = uplink_hz;
    j["doppler.terrestrial_speed_km_h"] = terrestrial_speed_km_h;
    j["doppler.terrestrial_carrier_hz"] = terrestrial_carrier_hz;
    j["doppler.min_elevation_deg"] = min_elevation_deg;
    j["doppler.sweep_elevations_deg"] = sweep_elevations_deg;
    j["doppler.sweep_errors_km"] = sweep_errors_km;
    j["numerology.index"] = numerology_index;
    j["numerology.cfo_reference_khz"] = cfo_policy.reference_cfo_khz;
    j["numerology.cfo_reference_scs_khz"] = cfo_policy.reference_scs_khz;
    j["ra.mode"] = to_string(ra_mode);
    j["ra.rar_window_ms"] = ra_timers.rar_window_ms;
    j["ra.contention_resolution_ms"] = ra_timers.contention_resolution_ms;
    j["ra.extended"] = ra_timers.extended;
    j["ra.processing_ms"] = ra_processing_ms;
    j["ra.tx_time_ms"] = ra_tx_time_ms;
    j["ra.loss_probability"] = ra_loss_probability;
    j["harq.n_processes"] = harq_n_processes_override;
    j["harq.tti_ms"] = harq.tti_ms;
    j["harq.ack_window_ms"] = harq.ack_window_ms;
    j["harq.ack_mode"] = to_string(harq.ack_mode);
    j["harq.max_transmissions"] = harq.max_transmissions;
    j["harq.per_tti_soft_bits"] = harq.per_tti_soft_bits;
    j["harq.required_redundancy"] = harq.redundancy.required_redundancy;
    j["harq.one_bit_increment"] = harq.redundancy.one_bit_increment;
    j["harq.two_bit_increments"] = harq.redundancy.two_bit_increments;
    j["harq.error_prob"] = harq_error_prob;
    j["harq.duration_ms"] = harq_duration_ms;
    j["harq.reduced_processes"] = harq_reduced_processes;
    return j;
}

Scenario Scenario::from_json(const json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("scenario: expected a JSON object with dotted keys");
    }
    Scenario s;
    for (const auto& [key, value] : j.items()) {
        if (key == "seed") {
            if (!value.is_number_integer()) bad_field(key, "expected an integer");
            s.seed = value.get<std::uint64_t>();
        } else if (key == "geometry.earth_radius_km") {
            s.earth.radius_km = as_number(value, key);
        } else if (key == "geometry.mu_km3_s2") {
            s.earth.mu_km3_s2 = as_number(value, key);
        } else if (key == "geometry.light_speed_km_s") {
            s.earth.light_speed_km_s = as_number(value, key);
        } else if (key == "geometry.altitude_km") {
            s.orbit.altitude_km = as_number(value, key);
        } else if (key == "geometry.payload_mode") {
            s.orbit.payload = payload_mode_from_string(as_string(value, key));
        } else if (key == "geometry.elevation_user_deg") {
            s.elevation_user_deg = as_number(value, key);
        } else if (key == "geometry.elevation_gateway_deg") {
            s.elevation_gateway_deg = as_number(value, key);
        } else if (key == "doppler.downlink_hz") {
            s.downlink_hz = as_number(value, key);
        } else if (key == "doppler.uplink_hz") {
            s.uplink_hz = as_number(value, key);
        } else if (key == "doppler.terrestrial_speed_km_h") {
            s.terrestrial_speed_km_h = as_number(value, key);
        } else if (key == "doppler.terrestrial_carrier_hz") {
            s.terrestrial_carrier_hz = as_number(value, key);
        } else if (key == "doppler.min_elevation_deg") {
            s.min_elevation_deg = as_number(value, key);
        } else if (key == "doppler.sweep_elevations_deg") {
            s.sweep_elevations_deg = as_number_list(value, key);
        } else if (key == "doppler.sweep_errors_km") {
            s.sweep_errors_km = as_number_list(value, key);
        } else if (key == "numerology.index") {
            s.numerology_index = as_int(value, key);
        } else if (key == "numerology.cfo_reference_khz") {
            s.cfo_policy.reference_cfo_khz = as_number(value, key);
        } else if (key == "numerology.cfo_reference_scs_khz") {
            s.cfo_policy.reference_scs_khz = as_number(value, key);
        } else if (key == "ra.mode") {
            s.ra_mode = ra_mode_from_string(as_string(value, key));
        } else if (key == "ra.rar_window_ms") {
            s.ra_timers.rar_window_ms = as_number(value, key);
        } else if (key == "ra.contention_resolution_ms") {
            s.ra_timers.contention_resolution_ms = as_number(value, key);
        } else if (key == "ra.extended") {
            s.ra_timers.extended = as_bool(value, key);
        } else if (key == "ra.processing_ms") {
            s.ra_processing_ms = as_number(value, key);
        } else if (key == "ra.tx_time_ms") {
            s.ra_tx_time_ms = as_number(value, key);
        } else if (key == "ra.loss_probability") {
            s.ra_loss_probability = as_number(value, key);
        } else if (key == "harq.n_processes") {
            s.harq_n_processes_override = as_int(value, key);
        } else if (key == "harq.tti_ms") {
            s.harq.tti_ms = as_number(value, key);
        } else if (key == "harq.ack_window_ms") {
            s.harq.ack_window_ms = as_number(value, key);
        } else if (key == "harq.ack_mode") {
            s.harq.ack_mode = ack_mode_from_string(as_string(value, key));
        } else if (key == "harq.max_transmissions") {
            s.harq.max_transmissions = as_int(value, key);
        } else if (key == "harq.per_tti_soft_bits") {
            s.harq.per_tti_soft_bits = as_number(value, key);
        } else if (key == "harq.required_redundancy") {
            s.harq.redundancy.required_redundancy = as_int(value, key);
        } else if (key == "harq.one_bit_increment") {
            s.harq.redundancy.one_bit_increment = as_int(value, key);
        } else if (key == "harq.two_bit_increments") {
            s.harq.redundancy.two_bit_increments = as_int_list(value, key);
        } else if (key == "harq.error_prob") {
            s.harq_error_prob = as_number(value, key);
        } else if (key == "harq.duration_ms") {
            s.harq_duration_ms = as_number(value, key);
        } else if (key == "harq.reduced_processes") {
            s.harq_reduced_processes = as_int(value, key);
        } else {
            bad_field(key, "unknown scenario key");
        }
    }
    s.validate();
    return s;
}

Scenario Scenario::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open scenario file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("scenario file '" + path + "': " + e.what());
    }
    return from_json(j);
}

}  // namespace ntnlab
