// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference computations, deliberately independent of the library
// formulas they are used to check.

#ifndef NTNLAB_TESTS_ORACLES_HPP
#define NTNLAB_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace oracles {

inline constexpr double kPi = std::numbers::pi;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Elevation seen from the ground node for a satellite at central angle g,
// straight from the plane triangle (no shared code with the library).
inline double elevation_of_central_deg(double g_rad, double re_km, double h_km) {
    const double r = re_km + h_km;
    return rad2deg(std::atan2(r * std::cos(g_rad) - re_km, r * std::sin(g_rad)));
}

// Slant range by the law of cosines at central angle g.
inline double slant_of_central_km(double g_rad, double re_km, double h_km) {
    const double r = re_km + h_km;
    return std::sqrt(re_km * re_km + r * r - 2.0 * re_km * r * std::cos(g_rad));
}

// Central angle for a given elevation found numerically by bisection on the
// triangle relation (the "solve the triangle" route).
inline double central_of_elevation_rad(double elevation_deg, double re_km, double h_km) {
    double lo = 0.0;
    double hi = std::acos(re_km / (re_km + h_km));  // horizon
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (elevation_of_central_deg(mid, re_km, h_km) > elevation_deg) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Numerical slant range for a given elevation: bisection + law of cosines.
inline double slant_range_km(double elevation_deg, double re_km, double h_km) {
    return slant_of_central_km(central_of_elevation_rad(elevation_deg, re_km, h_km),
                               re_km, h_km);
}

// Central finite difference of the slant range along a simulated pass,
// evaluated at the approaching-side instant where the elevation matches:
// f_d = -(f_c / c) * d'(t).
inline double finite_difference_doppler_hz(double carrier_hz, double elevation_deg,
                                           double re_km, double h_km, double mu_km3_s2,
                                           double c_km_s, double delta_s = 1e-3) {
    const double r = re_km + h_km;
    const double omega = std::sqrt(mu_km3_s2 / r) / r;  // rad/s
    const double g = central_of_elevation_rad(elevation_deg, re_km, h_km);
    // gamma decreases with time on the approaching side.
    const double d_plus = slant_of_central_km(g - omega * delta_s, re_km, h_km);
    const double d_minus = slant_of_central_km(g + omega * delta_s, re_km, h_km);
    const double range_rate_km_s = (d_plus - d_minus) / (2.0 * delta_s);
    return -(carrier_hz / c_km_s) * range_rate_km_s;
}

// Steady-state utilization of n parallel stop-and-wait processes.
inline double analytic_utilization(int n, double tti_ms, double rtt_ms, double ack_ms) {
    const double cycle = rtt_ms + ack_ms;
    const double u = static_cast<double>(n) * tti_ms / cycle;
    return u < 1.0 ? u : 1.0;
}

// Small deterministic generator for property tests.
class TestRng {
  public:
    explicit TestRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

  private:
    std::uint64_t state_;
};

}  // namespace oracles

#endif  // NTNLAB_TESTS_ORACLES_HPP
