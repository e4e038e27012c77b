// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NTNLAB_REPORT_HPP
#define NTNLAB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "ntnlab/scenario.hpp"

namespace ntnlab {

/// Locale-independent shortest round-trip formatting; the basis of the
/// byte-exact CSV and text artifacts.
std::string format_number(double value);
/// Fixed-precision variant for the human-readable report.
std::string format_fixed(double value, int precision);

nlohmann::json delay_json(const Scenario& s);
nlohmann::json doppler_json(const Scenario& s);
nlohmann::json numerology_json(const Scenario& s);
nlohmann::json ra_json(const Scenario& s);
nlohmann::json harq_dim_json(const Scenario& s);
nlohmann::json harq_json(const Scenario& s);
nlohmann::json strategies_json(const Scenario& s);

/// CSV with header elevation_deg,error_km,direction,residual_hz; one block
/// per direction (downlink first), rows elevation-major then error, LF line
/// endings, '.' decimal separator.
std::string residual_sweep_csv(const Scenario& s);

/// CSV with header strategy,n_processes,utilization,retransmissions,peak_buffer,dci_bits.
std::string strategy_table_csv(const Scenario& s);

/// The consolidated feasibility document: delay budget, Doppler and waveform
/// verdicts, RA timer verdicts and simulation, HARQ dimensioning and the
/// strategy table. Byte-identical across runs for a fixed scenario.
nlohmann::json report_json(const Scenario& s);
std::string report_text(const Scenario& s);

std::string delay_text(const Scenario& s);
std::string doppler_text(const Scenario& s);
std::string numerology_text(const Scenario& s);

}  // namespace ntnlab

#endif  // NTNLAB_REPORT_HPP
