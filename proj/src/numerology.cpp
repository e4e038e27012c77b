// Copyright 2026 the ntnlab authors
// SPDX-License-Identifier: Apache-2.0

#include "ntnlab/numerology.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ntnlab {

double scs_khz_from_index(int n) {
    if (n < 0) {
        throw std::invalid_argument("numerology index must be non-negative");
    }
    if (n > kMaxNumerologyIndex) {
        throw std::invalid_argument("numerology index must be at most " +
                                    std::to_string(kMaxNumerologyIndex));
    }
    return 15.0 * static_cast<double>(1 << n);
}

Numerology numerology_from_index(int n) { return {n, scs_khz_from_index(n)}; }

bool scs_in_family(double scs_khz) {
    for (int n = 0; n <= kMaxNumerologyIndex; ++n) {
        if (scs_khz == scs_khz_from_index(n)) return true;
    }
    return false;
}

void CfoTolerancePolicy::validate() const {
    if (!(reference_cfo_khz > 0.0) || !(reference_scs_khz > 0.0)) {
        throw std::invalid_argument("CFO tolerance policy references must be positive");
    }
    if (!(reference_cfo_khz < reference_scs_khz)) {
        throw std::invalid_argument("CFO tolerance must be a fraction below one subcarrier spacing");
    }
}

double max_tolerable_cfo_khz(double scs_khz, const CfoTolerancePolicy& policy) {
    policy.validate();
    if (!scs_in_family(scs_khz)) {
        throw std::invalid_argument("subcarrier spacing is not in the 15*2^n kHz family");
    }
    // Evaluated as (scs / ref_scs) * ref_cfo: the ratio is a power of two for
    // family members, so the reference point reproduces exactly.
    return scs_khz / policy.reference_scs_khz * policy.reference_cfo_khz;
}

WaveformVerdict waveform_feasibility(double residual_hz, const Numerology& numerology,
                                     const CfoTolerancePolicy& policy) {
    if (!std::isfinite(residual_hz)) {
        throw std::invalid_argument("residual must be finite");
    }
    WaveformVerdict verdict;
    verdict.tolerance_hz = max_tolerable_cfo_khz(numerology.scs_khz, policy) * 1000.0;
    verdict.margin_hz = verdict.tolerance_hz - std::abs(residual_hz);
    verdict.feasible = std::abs(residual_hz) <= verdict.tolerance_hz;
    return verdict;
}

}  // namespace ntnlab
