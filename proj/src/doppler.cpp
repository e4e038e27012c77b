// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#include "ntnlab/doppler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ntnlab {

namespace {

constexpr double kRadPerDeg = std::numbers::pi / 180.0;

double deg2rad(double deg) { return deg * kRadPerDeg; }

}  // namespace

std::string to_string(LinkDirection d) {
    return d == LinkDirection::downlink ? "downlink" : "uplink";
}

LinkDirection link_direction_from_string(const std::string& s) {
    if (s == "downlink") return LinkDirection::downlink;
    if (s == "uplink") return LinkDirection::uplink;
    throw std::invalid_argument("link direction must be 'downlink' or 'uplink', got '" + s + "'");
}

CarrierConfig CarrierConfig::downlink(double frequency_hz) {
    return CarrierConfig{frequency_hz, LinkDirection::downlink};
}

CarrierConfig CarrierConfig::uplink(double frequency_hz) {
    return CarrierConfig{frequency_hz, LinkDirection::uplink};
}

void CarrierConfig::validate() const {
    if (!(frequency_hz > 0.0)) {
        throw std::invalid_argument("carrier.frequency_hz must be positive");
    }
}

double doppler_factor(double elevation_deg, const OrbitConfig& orbit,
                      const EarthModel& earth) {
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0)) {
        throw std::invalid_argument("elevation must be in [0, 90] degrees");
    }
    const double v = orbital_speed_km_s(orbit, earth);
    const double r = earth.radius_km + orbit.altitude_km;
    // cos(elevation) via the complementary sine: exactly 0 at the zenith.
    const double cos_elev = std::sin(deg2rad(90.0 - elevation_deg));
    return (v / earth.light_speed_km_s) * (earth.radius_km / r) * cos_elev;
}

double signed_doppler_factor(double central_angle_rad, const OrbitConfig& orbit,
                             const EarthModel& earth) {
    if (central_angle_rad == 0.0) return 0.0;
    const double g = std::abs(central_angle_rad);
    const double re = earth.radius_km;
    const double r = re + orbit.altitude_km;
    if (g > std::acos(re / r)) {
        throw std::domain_error("below horizon: central angle exceeds the visibility limit");
    }
    const double v = orbital_speed_km_s(orbit, earth);
    const double d = std::sqrt(re * re + r * r - 2.0 * re * r * std::cos(g));
    const double cos_elev = r * std::sin(g) / d;
    return std::copysign((v / earth.light_speed_km_s) * (re / r) * cos_elev,
                         central_angle_rad);
}

double instantaneous_doppler_hz(const CarrierConfig& carrier, double elevation_deg,
                                const OrbitConfig& orbit, const EarthModel& earth) {
    carrier.validate();
    return carrier.frequency_hz * doppler_factor(elevation_deg, orbit, earth);
}

double max_doppler_hz(const CarrierConfig& carrier, double min_elevation_deg,
                      const OrbitConfig& orbit, const EarthModel& earth) {
    // cos(elevation) decreases on [0, 90], so the maximum over the visible
    // arc above min_elevation is attained at min_elevation itself.
    return instantaneous_doppler_hz(carrier, min_elevation_deg, orbit, earth);
}

double terrestrial_doppler_hz(double speed_km_h, const CarrierConfig& carrier,
                              const EarthModel& earth) {
    carrier.validate();
    earth.validate();
    if (!(speed_km_h >= 0.0)) {
        throw std::invalid_argument("speed must be non-negative");
    }
    return carrier.frequency_hz * ((speed_km_h / 3600.0) / earth.light_speed_km_s);
}

namespace {

// Believed central angle implied by an along-track estimation error: the
// believed ground position sits error/Re radians further along the direction
// of satellite motion than the true one.
double estimated_central_angle_rad(const PositionEstimate& estimate,
                                   double true_central_angle_rad,
                                   const EarthModel& earth) {
    estimate.validate();
    return true_central_angle_rad + estimate.along_track_error_km / earth.radius_km;
}

double checked_estimated_angle(const PositionEstimate& estimate,
                               double true_central_angle_rad,
                               const OrbitConfig& orbit, const EarthModel& earth) {
    const double ge = estimated_central_angle_rad(estimate, true_central_angle_rad, earth);
    const double horizon = std::acos(earth.radius_km / (earth.radius_km + orbit.altitude_km));
    if (std::abs(ge) > horizon) {
        throw std::domain_error("estimated position below horizon");
    }
    return ge;
}

}  // namespace

void PositionEstimate::validate() const {
    if (!(along_track_error_km >= 0.0)) {
        throw std::invalid_argument("along_track_error_km must be non-negative");
    }
}

double precompensation_shift_hz(const PositionEstimate& estimate,
                                const CarrierConfig& carrier,
                                const PassGeometry& pass, double t_s) {
    carrier.validate();
    const double g_true = pass.signed_central_angle_rad(t_s);
    const double g_est = checked_estimated_angle(estimate, g_true, pass.orbit(), pass.earth());
    return carrier.frequency_hz * signed_doppler_factor(g_est, pass.orbit(), pass.earth());
}

double residual_doppler_hz(const PositionEstimate& estimate,
                           const CarrierConfig& carrier,
                           const PassGeometry& pass, double t_s) {
    carrier.validate();
    const double g_true = pass.signed_central_angle_rad(t_s);
    const double g_est = checked_estimated_angle(estimate, g_true, pass.orbit(), pass.earth());
    const double factor_true = signed_doppler_factor(g_true, pass.orbit(), pass.earth());
    const double factor_est = signed_doppler_factor(g_est, pass.orbit(), pass.earth());
    // Single final rounding keeps the error-free case identically zero.
    return carrier.frequency_hz * (factor_true - factor_est);
}

double residual_doppler_at_elevation_hz(double elevation_deg, double error_km,
                                        const CarrierConfig& carrier,
                                        const OrbitConfig& orbit,
                                        const EarthModel& earth) {
    carrier.validate();
    const double g_true = deg2rad(central_angle_from_elevation_deg(elevation_deg, orbit, earth));
    const PositionEstimate estimate{error_km};
    const double g_est = checked_estimated_angle(estimate, g_true, orbit, earth);
    const double factor_true = signed_doppler_factor(g_true, orbit, earth);
    const double factor_est = signed_doppler_factor(g_est, orbit, earth);
    return carrier.frequency_hz * (factor_true - factor_est);
}

std::vector<ResidualDopplerSample> residual_sweep(
    std::span<const double> elevations_deg, std::span<const double> errors_km,
    std::span<const CarrierConfig> carriers, const OrbitConfig& orbit,
    const EarthModel& earth) {
    if (elevations_deg.empty() || errors_km.empty() || carriers.empty()) {
        throw std::invalid_argument("residual sweep requires non-empty elevation, error and carrier lists");
    }
    for (const auto& c : carriers) c.validate();

    std::vector<ResidualDopplerSample> rows;
    rows.reserve(elevations_deg.size() * errors_km.size() * carriers.size());

    const std::size_t block = elevations_deg.size() * errors_km.size();
    const CarrierConfig& base = carriers.front();
    for (double elev : elevations_deg) {
        for (double err : errors_km) {
            rows.push_back({elev, err, base.direction,
                            residual_doppler_at_elevation_hz(elev, err, base, orbit, earth)});
        }
    }
    for (std::size_t ci = 1; ci < carriers.size(); ++ci) {
        const double ratio = carriers[ci].frequency_hz / base.frequency_hz;
        for (std::size_t i = 0; i < block; ++i) {
            ResidualDopplerSample row = rows[i];
            row.direction = carriers[ci].direction;
            row.residual_hz = rows[i].residual_hz * ratio;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace ntnlab
