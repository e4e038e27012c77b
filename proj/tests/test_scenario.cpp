// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ntnlab/report.hpp"
#include "ntnlab/scenario.hpp"

using namespace ntnlab;
using nlohmann::json;

namespace {

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) {
        if (c == '\n') ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("the default scenario is the reference scenario") {
    Scenario s;
    CHECK_NOTHROW(s.validate());
    const LinkBudgetDelay d = s.delay();
    CHECK(std::abs(d.one_way_ms - 25.83) / 25.83 < 0.002);
    CHECK(s.two_way_rounded_ms() == 51.0);
    CHECK(s.resolved_harq().n_processes == 59);
    CHECK(s.sweep_errors_km.size() == 21);
    CHECK(s.sweep_errors_km.front() == 0.0);
    CHECK(s.sweep_errors_km.back() == 10.0);
}

TEST_CASE("scenario JSON round-trips identically") {
    Scenario s;
    s.seed = 99;
    s.orbit.payload = PayloadMode::regenerative;
    s.harq_error_prob = 0.25;
    const json j = s.to_json();
    const Scenario back = Scenario::from_json(j);
    CHECK(back.to_json() == j);
    // And the reports built from both are byte-identical.
    CHECK(report_json(s).dump(2) == report_json(back).dump(2));
}

TEST_CASE("unknown keys and bad types carry the field path") {
    CHECK_THROWS_WITH_AS((Scenario::from_json(json{{"geometry.bogus", 1.0}})),
                         "geometry.bogus: unknown scenario key", std::invalid_argument);
    CHECK_THROWS_WITH_AS((Scenario::from_json(json{{"geometry.altitude_km", "high"}})),
                         "geometry.altitude_km: expected a number", std::invalid_argument);
    CHECK_THROWS_WITH_AS((Scenario::from_json(json{{"numerology.index", 2.5}})),
                         "numerology.index: expected an integer", std::invalid_argument);
    try {
        Scenario::from_json(json{{"geometry.altitude_km", -10.0}});
        FAIL("expected validation failure");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("geometry.altitude_km") != std::string::npos);
    }
    try {
        Scenario::from_json(json{{"ra.rar_window_ms", 20.0}});
        FAIL("expected the RAR cap to trip");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("ra.rar_window_ms") != std::string::npos);
    }
    CHECK_NOTHROW(
        Scenario::from_json(json{{"ra.rar_window_ms", 20.0}, {"ra.extended", true}}));
}

TEST_CASE("residual sweep CSV has the documented shape") {
    Scenario s;
    const std::string csv = residual_sweep_csv(s);
    CHECK(csv.rfind("elevation_deg,error_km,direction,residual_hz\n", 0) == 0);
    // 4 elevations x 21 errors x 2 directions + header.
    CHECK(count_lines(csv) == 1 + 168);
    CHECK(csv.find("\r") == std::string::npos);  // LF only
    // Zero-error rows are exactly zero.
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    std::size_t zero_rows = 0;
    while (std::getline(in, line)) {
        const std::string rest = line.substr(line.find(',') + 1);
        if (rest.rfind("0,", 0) == 0) {
            CHECK(line.substr(line.rfind(',') + 1) == "0");
            ++zero_rows;
        }
    }
    CHECK(zero_rows == 8);  // 4 elevations x 2 directions
    // Byte-identical on a second run.
    CHECK(residual_sweep_csv(s) == csv);
}

TEST_CASE("harq-dim reports both roundings") {
    Scenario s;
    const json dim = harq_dim_json(s);
    CHECK(dim["n_min_paper_rounding"] == 59);
    CHECK(dim["n_min_exact"] == 60);
    CHECK(dim["dci_bits"] == 6);
    CHECK(dim["buffer_ratio_vs_lte"] == 7.375);
}

TEST_CASE("the default RA verdict is a RAR expiry") {
    Scenario s;
    const json ra = ra_json(s);
    CHECK(ra["analysis"]["rar"]["feasible"] == false);
    CHECK(ra["analysis"]["contention_resolution"]["feasible"] == true);
    CHECK(ra["simulation"]["success"] == false);
    CHECK(ra["simulation"]["failure_step"] == "rar_expiry");
}

TEST_CASE("an extended window flips the simulated verdict") {
    Scenario s;
    s.ra_timers.rar_window_ms = 54.0;
    s.ra_timers.extended = true;
    const json ra = ra_json(s);
    CHECK(ra["simulation"]["success"] == true);
    CHECK(ra["simulation"]["failure_step"].is_null());
}

TEST_CASE("the regenerative scenario halves the delay-derived figures") {
    Scenario s;
    s.orbit.payload = PayloadMode::regenerative;
    const LinkBudgetDelay d = s.delay();
    CHECK(std::abs(d.two_way_ms - 24.32) / 24.32 < 0.002);
    const json dim = harq_dim_json(s);
    CHECK(dim["two_way_delay_rounded_ms"] == 24.0);
    CHECK(dim["n_min_paper_rounding"] == 32);
    CHECK(dim["n_min_exact"] == 33);
}

TEST_CASE("the report is deterministic and seed changes touch only simulation fields") {
    Scenario s;
    const std::string once = report_json(s).dump(2);
    const std::string twice = report_json(s).dump(2);
    CHECK(once == twice);

    Scenario other = s;
    other.seed = 4242;
    const json a = report_json(s);
    const json b = report_json(other);
    CHECK(a["delay"] == b["delay"]);
    CHECK(a["doppler"] == b["doppler"]);
    CHECK(a["numerology"] == b["numerology"]);
    CHECK(a["harq"]["n_min_paper_rounding"] == b["harq"]["n_min_paper_rounding"]);
    CHECK(a["harq"]["dci_bits"] == b["harq"]["dci_bits"]);
    // The text rendering is deterministic too.
    CHECK(report_text(s) == report_text(s));
}

TEST_CASE("the report aggregates every module verdict") {
    Scenario s;
    const json r = report_json(s);
    CHECK(r.contains("scenario"));
    CHECK(r["delay"]["two_way_ms"].get<double>() > 51.0);
    CHECK(r["doppler"]["max_doppler_dl_hz"].get<double>() > 350e3);
    CHECK(r["numerology"]["dl_feasible"] == true);
    CHECK(r["random_access"]["simulation"]["failure_step"] == "rar_expiry");
    CHECK(r["harq"]["strategies"].size() == 4);
    // Strategy CSV shares the shape with the JSON rows.
    const std::string csv = strategy_table_csv(s);
    CHECK(csv.rfind("strategy,n_processes,utilization,retransmissions,peak_buffer,dci_bits\n",
                    0) == 0);
    CHECK(count_lines(csv) == 1 + 4);
}

TEST_CASE("scenario file loading") {
    CHECK_THROWS_AS(Scenario::load_file("/nonexistent/path.json"), std::runtime_error);
}
