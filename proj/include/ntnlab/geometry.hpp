// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NTNLAB_GEOMETRY_HPP
#define NTNLAB_GEOMETRY_HPP

#include <string>

namespace ntnlab {

/// Physical constants every geometric formula depends on. Defaults are the
/// conventional mean Earth radius, WGS-84 gravitational parameter and the
/// exact speed of light; all overridable for sensitivity experiments.
struct EarthModel {
    double radius_km = 6371.0;
    double mu_km3_s2 = 398600.4418;
    double light_speed_km_s = 299792.458;

    void validate() const;  // throws std::invalid_argument
};

enum class PayloadMode { transparent, regenerative };

std::string to_string(PayloadMode mode);
PayloadMode payload_mode_from_string(const std::string& s);

struct OrbitConfig {
    double altitude_km = 1500.0;
    PayloadMode payload = PayloadMode::transparent;

    void validate() const;
};

/// Instantaneous satellite-ground geometry as seen from the ground node.
struct LinkGeometry {
    double elevation_deg = 0.0;      // 90 = zenith
    double central_angle_deg = 0.0;  // Earth-center angle, unsigned
    double slant_range_km = 0.0;     // line-of-sight distance
};

/// One-way / two-way propagation delay decomposition of the user-sat-gateway
/// path. For a transparent payload both legs count; a regenerative payload
/// terminates the radio link on board so only the user leg enters the RTT.
struct LinkBudgetDelay {
    double user_sat_ms = 0.0;
    double sat_gateway_ms = 0.0;
    double one_way_ms = 0.0;
    double two_way_ms = 0.0;
    PayloadMode payload = PayloadMode::transparent;
};

/// Line-of-sight distance to a satellite at the given elevation angle.
/// Closed-form solution of the ground-center-satellite triangle; equals the
/// orbit altitude exactly at 90 degrees.
double slant_range_km(double elevation_deg, const OrbitConfig& orbit,
                      const EarthModel& earth);

/// distance / c, reported in milliseconds.
double propagation_delay_ms(double distance_km, const EarthModel& earth);

LinkBudgetDelay delay_budget(double elev_user_deg, double elev_gateway_deg,
                             const OrbitConfig& orbit, const EarthModel& earth);

/// Circular-orbit speed at the configured altitude, sqrt(mu / (Re + h)).
double orbital_speed_km_s(const OrbitConfig& orbit, const EarthModel& earth);

/// Earth-center angle beyond which the satellite sits below the horizon,
/// acos(Re / (Re + h)).
double horizon_central_angle_deg(const OrbitConfig& orbit, const EarthModel& earth);

/// Elevation seen from the ground node when the satellite is displaced by the
/// given Earth-center angle. Throws std::domain_error below the horizon.
double elevation_from_central_angle_deg(double central_angle_deg,
                                        const OrbitConfig& orbit,
                                        const EarthModel& earth);

/// Inverse of elevation_from_central_angle_deg on the visible domain.
double central_angle_from_elevation_deg(double elevation_deg,
                                        const OrbitConfig& orbit,
                                        const EarthModel& earth);

/// In-plane circular-orbit pass of one satellite over a ground node. The
/// signed central angle evolves as gamma(t) = gamma0 - omega * t with
/// omega = v_sat / (Re + h); gamma > 0 means the satellite is approaching,
/// gamma = 0 is the zenith crossing.
class PassGeometry {
  public:
    PassGeometry(const EarthModel& earth, const OrbitConfig& orbit,
                 double initial_central_angle_deg);

    /// Pass that crosses the zenith at t = 0.
    static PassGeometry zenith_at_origin(const EarthModel& earth,
                                         const OrbitConfig& orbit);

    /// Pass positioned so the satellite sits at `elevation_deg` on the
    /// approaching side at t = 0.
    static PassGeometry starting_at_elevation(const EarthModel& earth,
                                              const OrbitConfig& orbit,
                                              double elevation_deg);

    double angular_rate_rad_s() const { return omega_rad_s_; }
    double zenith_time_s() const;

    double signed_central_angle_deg(double t_s) const;
    double signed_central_angle_rad(double t_s) const;
    bool approaching(double t_s) const { return signed_central_angle_rad(t_s) > 0.0; }

    /// Geometry at time t. Throws std::domain_error outside the visibility
    /// window.
    LinkGeometry state(double t_s) const;

    /// Time at which the true elevation equals `elevation_deg` on the
    /// approaching (default) or receding side.
    double time_at_elevation_s(double elevation_deg, bool approaching_side = true) const;

    const EarthModel& earth() const { return earth_; }
    const OrbitConfig& orbit() const { return orbit_; }

  private:
    EarthModel earth_;
    OrbitConfig orbit_;
    double gamma0_rad_;
    double omega_rad_s_;
    double horizon_rad_;
};

}  // namespace ntnlab

#endif  // NTNLAB_GEOMETRY_HPP
