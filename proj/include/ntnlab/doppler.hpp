// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NTNLAB_DOPPLER_HPP
#define NTNLAB_DOPPLER_HPP

#include <span>
#include <string>
#include <vector>

#include "ntnlab/geometry.hpp"

namespace ntnlab {

enum class LinkDirection { downlink, uplink };

std::string to_string(LinkDirection d);
LinkDirection link_direction_from_string(const std::string& s);

struct CarrierConfig {
    double frequency_hz = 20e9;
    LinkDirection direction = LinkDirection::downlink;

    static CarrierConfig downlink(double frequency_hz = 20e9);
    static CarrierConfig uplink(double frequency_hz = 30e9);

    void validate() const;
};

/// GNSS-derived position of the ground node, displaced from the truth by
/// `along_track_error_km` along the sub-satellite ground track in the
/// direction of satellite motion.
struct PositionEstimate {
    double along_track_error_km = 0.0;

    void validate() const;
};

struct ResidualDopplerSample {
    double elevation_deg = 0.0;
    double error_km = 0.0;
    LinkDirection direction = LinkDirection::downlink;
    double residual_hz = 0.0;
};

/// Line-of-sight velocity over c at the given elevation, carrier free:
/// (v_sat / c) * (Re / (Re + h)) * cos(elevation). All Doppler values are
/// carrier.frequency_hz times this factor.
double doppler_factor(double elevation_deg, const OrbitConfig& orbit,
                      const EarthModel& earth);

/// Same factor as a signed quantity at a signed central angle: positive while
/// the satellite approaches (gamma > 0), zero at the zenith.
double signed_doppler_factor(double central_angle_rad, const OrbitConfig& orbit,
                             const EarthModel& earth);

/// Magnitude of the Doppler shift on the ground-satellite link at the given
/// elevation. Zero exactly at the zenith. The approaching/receding sign is a
/// property of the pass instant, see PassGeometry::approaching.
double instantaneous_doppler_hz(const CarrierConfig& carrier, double elevation_deg,
                                const OrbitConfig& orbit, const EarthModel& earth);

/// Maximum Doppler over elevations >= min_elevation_deg; the cosine law makes
/// it attained at min_elevation_deg itself.
double max_doppler_hz(const CarrierConfig& carrier, double min_elevation_deg,
                      const OrbitConfig& orbit, const EarthModel& earth);

/// Terrestrial mobility baseline, (v / c) * f_c.
double terrestrial_doppler_hz(double speed_km_h, const CarrierConfig& carrier,
                              const EarthModel& earth = {});

/// Doppler the gateway applies, computed from the erroneous geometry implied
/// by the position estimate (signed, positive = believed approaching).
/// Throws std::domain_error when the estimated position sees the satellite
/// below the horizon.
double precompensation_shift_hz(const PositionEstimate& estimate,
                                const CarrierConfig& carrier,
                                const PassGeometry& pass, double t_s);

/// Residual after pre-compensation: true Doppler minus the applied shift,
/// signed. Identically zero when the estimate is error free.
double residual_doppler_hz(const PositionEstimate& estimate,
                           const CarrierConfig& carrier,
                           const PassGeometry& pass, double t_s);

/// Residual evaluated at the approaching-side instant where the true
/// elevation equals `elevation_deg`.
double residual_doppler_at_elevation_hz(double elevation_deg, double error_km,
                                        const CarrierConfig& carrier,
                                        const OrbitConfig& orbit,
                                        const EarthModel& earth);

/// Full cross-product table, one block per carrier in input order, rows
/// elevation-major then error within a block. Rows for carriers beyond the
/// first are scaled from the first carrier's rows by the exact frequency
/// ratio, so the linearity in f_c is preserved bit for bit.
std::vector<ResidualDopplerSample> residual_sweep(
    std::span<const double> elevations_deg, std::span<const double> errors_km,
    std::span<const CarrierConfig> carriers, const OrbitConfig& orbit,
    const EarthModel& earth);

}  // namespace ntnlab

#endif  // NTNLAB_DOPPLER_HPP
