// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NTNLAB_NUMEROLOGY_HPP
#define NTNLAB_NUMEROLOGY_HPP

namespace ntnlab {

inline constexpr int kMaxNumerologyIndex = 6;

/// NR subcarrier-spacing family member, scs = 15 * 2^n kHz.
struct Numerology {
    int index = 0;
    double scs_khz = 15.0;
};

double scs_khz_from_index(int n);  // throws on n < 0 or n > kMaxNumerologyIndex
Numerology numerology_from_index(int n);
bool scs_in_family(double scs_khz);

/// Maximum tolerable carrier frequency offset as a fixed fraction of the
/// subcarrier spacing; the fraction is calibrated so the 480 kHz spacing
/// tolerates 30.4 kHz.
struct CfoTolerancePolicy {
    double reference_cfo_khz = 30.4;
    double reference_scs_khz = 480.0;

    double fraction() const { return reference_cfo_khz / reference_scs_khz; }
    void validate() const;
};

double max_tolerable_cfo_khz(double scs_khz, const CfoTolerancePolicy& policy = {});

struct WaveformVerdict {
    bool feasible = false;
    double margin_hz = 0.0;
    double tolerance_hz = 0.0;
};

/// Feasible iff |residual| fits within the tolerable CFO of the numerology.
WaveformVerdict waveform_feasibility(double residual_hz, const Numerology& numerology,
                                     const CfoTolerancePolicy& policy = {});

}  // namespace ntnlab

#endif  // NTNLAB_NUMEROLOGY_HPP
