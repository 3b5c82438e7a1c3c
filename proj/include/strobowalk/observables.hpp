#pragma once

#include <span>
#include <vector>

#include "strobowalk/walker_state.hpp"

namespace strobowalk {

/// Position probabilities indexed by offset n - origin. Offsets run over
/// -t..t in strides of 2, matching the parity the light cone allows.
struct Distribution {
    int step = 0;
    std::vector<long> offsets;
    std::vector<double> probabilities;
};

/// Spread statistics of one recorded step, in offset units.
struct SpreadRecord {
    int step = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double rms_displacement = 0.0; // sqrt(<(n - n0)^2>); rms^2 = stddev^2 + mean^2
    double norm_error = 0.0;
};

/// Inclusive step interval used for exponent fits.
struct FitRange {
    int lo = 0;
    int hi = 0;
};

struct ExponentFit {
    double alpha = 0.0;
    double rms_residual = 0.0;
};

Distribution distribution(const WalkerState& state);

SpreadRecord spread(const Distribution& dist, int step);

/// Symmetric binomial distribution of t fair +-1 steps (stddev sqrt(t)),
/// on the same offset grid a t-step walk occupies.
Distribution classical_reference(int step);

/// Least-squares slope of log(stddev) against log(step) over the fit range.
/// Requires at least 10 records with positive stddev inside the range.
ExponentFit growth_exponent(std::span<const SpreadRecord> series, FitRange range);

/// Last half of the trajectory, where spreading regimes have settled.
FitRange default_fit_range(int steps);

} // namespace strobowalk
