// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#include "ntnlab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ntnlab {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;
constexpr double kRadPerDeg = std::numbers::pi / 180.0;

double deg2rad(double deg) { return deg * kRadPerDeg; }
double rad2deg(double rad) { return rad * kDegPerRad; }

// sin(elevation) evaluated as cos of the zenith distance so that the 90
// degree case yields exactly 1 and the 0 degree case exactly 0.
double sin_elevation(double elevation_deg) {
    return std::cos(deg2rad(90.0 - elevation_deg));
}

void check_elevation_range(double elevation_deg) {
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0)) {
        throw std::invalid_argument("elevation must be in [0, 90] degrees");
    }
}

}  // namespace

void EarthModel::validate() const {
    if (!(radius_km > 0.0)) {
        throw std::invalid_argument("earth.radius_km must be positive");
    }
    if (!(mu_km3_s2 > 0.0)) {
        throw std::invalid_argument("earth.mu_km3_s2 must be positive");
    }
    if (!(light_speed_km_s > 0.0)) {
        throw std::invalid_argument("earth.light_speed_km_s must be positive");
    }
}

void OrbitConfig::validate() const {
    if (!(altitude_km > 0.0)) {
        throw std::invalid_argument("orbit.altitude_km must be positive");
    }
}

std::string to_string(PayloadMode mode) {
    return mode == PayloadMode::transparent ? "transparent" : "regenerative";
}

PayloadMode payload_mode_from_string(const std::string& s) {
    if (s == "transparent") return PayloadMode::transparent;
    if (s == "regenerative") return PayloadMode::regenerative;
    throw std::invalid_argument("payload mode must be 'transparent' or 'regenerative', got '" + s + "'");
}

double slant_range_km(double elevation_deg, const OrbitConfig& orbit,
                      const EarthModel& earth) {
    earth.validate();
    orbit.validate();
    check_elevation_range(elevation_deg);
    const double re = earth.radius_km;
    const double h = orbit.altitude_km;
    const double s = sin_elevation(elevation_deg);
    return std::sqrt(re * re * s * s + 2.0 * re * h + h * h) - re * s;
}

double propagation_delay_ms(double distance_km, const EarthModel& earth) {
    earth.validate();
    if (!(distance_km >= 0.0)) {
        throw std::invalid_argument("distance must be non-negative");
    }
    return distance_km / earth.light_speed_km_s * 1000.0;
}

LinkBudgetDelay delay_budget(double elev_user_deg, double elev_gateway_deg,
                             const OrbitConfig& orbit, const EarthModel& earth) {
    LinkBudgetDelay budget;
    budget.payload = orbit.payload;
    budget.user_sat_ms =
        propagation_delay_ms(slant_range_km(elev_user_deg, orbit, earth), earth);
    budget.sat_gateway_ms =
        propagation_delay_ms(slant_range_km(elev_gateway_deg, orbit, earth), earth);
    if (orbit.payload == PayloadMode::transparent) {
        budget.one_way_ms = budget.user_sat_ms + budget.sat_gateway_ms;
    } else {
        // Regenerative payload terminates the link on board: the RTT seen by
        // the MAC procedures only involves the user leg.
        budget.one_way_ms = budget.user_sat_ms;
    }
    budget.two_way_ms = 2.0 * budget.one_way_ms;
    return budget;
}

double orbital_speed_km_s(const OrbitConfig& orbit, const EarthModel& earth) {
    earth.validate();
    // The circular-orbit law is well defined down to the surface (h = 0, the
    // first cosmic velocity), a useful sanity bound even though no other
    // geometry accepts a zero altitude.
    if (!(orbit.altitude_km >= 0.0)) {
        throw std::invalid_argument("orbit.altitude_km must be non-negative");
    }
    return std::sqrt(earth.mu_km3_s2 / (earth.radius_km + orbit.altitude_km));
}

double horizon_central_angle_deg(const OrbitConfig& orbit, const EarthModel& earth) {
    earth.validate();
    orbit.validate();
    return rad2deg(std::acos(earth.radius_km / (earth.radius_km + orbit.altitude_km)));
}

double elevation_from_central_angle_deg(double central_angle_deg,
                                        const OrbitConfig& orbit,
                                        const EarthModel& earth) {
    earth.validate();
    orbit.validate();
    if (!(central_angle_deg >= 0.0)) {
        throw std::invalid_argument("central angle must be non-negative");
    }
    const double re = earth.radius_km;
    const double r = re + orbit.altitude_km;
    const double g = deg2rad(central_angle_deg);
    // Zenith distance of the line of sight; elevation is its complement.
    const double zenith_rad = std::atan2(r * std::sin(g), r * std::cos(g) - re);
    const double elevation = 90.0 - rad2deg(zenith_rad);
    if (elevation < 0.0) {
        if (elevation > -1e-12) return 0.0;  // horizon, within rounding
        throw std::domain_error("below horizon: central angle exceeds the visibility limit");
    }
    return elevation;
}

double central_angle_from_elevation_deg(double elevation_deg,
                                        const OrbitConfig& orbit,
                                        const EarthModel& earth) {
    earth.validate();
    orbit.validate();
    check_elevation_range(elevation_deg);
    const double r = earth.radius_km + orbit.altitude_km;
    // beta is the zenith distance; gamma = beta - asin((Re/r) sin beta) is the
    // spherical-triangle relation, exact at the zenith (beta = 0 -> gamma = 0).
    const double beta = deg2rad(90.0 - elevation_deg);
    return rad2deg(beta - std::asin(earth.radius_km / r * std::sin(beta)));
}

PassGeometry::PassGeometry(const EarthModel& earth, const OrbitConfig& orbit,
                           double initial_central_angle_deg)
    : earth_(earth), orbit_(orbit) {
    earth_.validate();
    orbit_.validate();
    gamma0_rad_ = deg2rad(initial_central_angle_deg);
    omega_rad_s_ = orbital_speed_km_s(orbit_, earth_) /
                   (earth_.radius_km + orbit_.altitude_km);
    horizon_rad_ = std::acos(earth_.radius_km / (earth_.radius_km + orbit_.altitude_km));
    if (std::abs(gamma0_rad_) > horizon_rad_) {
        throw std::invalid_argument("initial central angle places the satellite below the horizon");
    }
}

PassGeometry PassGeometry::zenith_at_origin(const EarthModel& earth,
                                            const OrbitConfig& orbit) {
    return PassGeometry(earth, orbit, 0.0);
}

PassGeometry PassGeometry::starting_at_elevation(const EarthModel& earth,
                                                 const OrbitConfig& orbit,
                                                 double elevation_deg) {
    return PassGeometry(earth, orbit,
                        central_angle_from_elevation_deg(elevation_deg, orbit, earth));
}

double PassGeometry::zenith_time_s() const { return gamma0_rad_ / omega_rad_s_; }

double PassGeometry::signed_central_angle_rad(double t_s) const {
    return gamma0_rad_ - omega_rad_s_ * t_s;
}

double PassGeometry::signed_central_angle_deg(double t_s) const {
    return rad2deg(signed_central_angle_rad(t_s));
}

LinkGeometry PassGeometry::state(double t_s) const {
    const double g_signed = signed_central_angle_rad(t_s);
    const double g = std::abs(g_signed);
    if (g > horizon_rad_) {
        throw std::domain_error("below horizon: time outside the visibility window");
    }
    const double re = earth_.radius_km;
    const double r = re + orbit_.altitude_km;
    LinkGeometry lg;
    lg.central_angle_deg = rad2deg(g);
    const double zenith_rad = std::atan2(r * std::sin(g), r * std::cos(g) - re);
    lg.elevation_deg = 90.0 - rad2deg(zenith_rad);
    lg.slant_range_km = std::sqrt(re * re + r * r - 2.0 * re * r * std::cos(g));
    return lg;
}

double PassGeometry::time_at_elevation_s(double elevation_deg, bool approaching_side) const {
    const double g = deg2rad(central_angle_from_elevation_deg(elevation_deg, orbit_, earth_));
    const double target = approaching_side ? g : -g;
    return (gamma0_rad_ - target) / omega_rad_s_;
}

}  // namespace ntnlab
