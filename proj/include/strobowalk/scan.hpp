#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "strobowalk/observables.hpp"
#include "strobowalk/walk.hpp"

namespace strobowalk {

enum class Regime { ballistic, superclassical, classical, localized };

const char* to_string(Regime regime);

struct Classification {
    Regime regime = Regime::localized;
    double alpha = 0.0;
    double rms_residual = 0.0;
};

/// Label a trajectory by its fitted growth exponent:
/// alpha >= 0.9 ballistic, [0.6, 0.9) superclassical, [0.4, 0.6) classical,
/// below 0.4 localized.
Classification classify(std::span<const SpreadRecord> series, FitRange range);

struct ScanCell {
    Rational tau_fraction;       // k/grid, reduced
    double tau_over_talbot = 0.0;
    bool walked = false;
    SpreadRecord final_record{};
    bool classified = false;
    double alpha = std::numeric_limits<double>::quiet_NaN();
    double fit_residual = std::numeric_limits<double>::quiet_NaN();
    Regime regime = Regime::localized;
    std::vector<SpreadRecord> per_step; // populated when requested
    std::string error;                  // non-empty if the cell failed
};

struct ScanResult {
    SpectrumModel model;
    int steps = 0;
    int grid = 0;
    bool per_step = false;
    std::vector<ScanCell> cells;
};

/// One deterministic walk per grid point tau_k = (k/grid) * T, k < grid.
/// Cells are independent; `threads` = 1 runs the serial reference loop,
/// 0 uses all OpenMP threads, n > 1 uses n. Results are identical
/// regardless of thread count. Per-cell failures land in ScanCell::error
/// without aborting the scan.
ScanResult tau_scan(const WalkConfig& base, int grid, bool record_per_step,
                    int threads = 1);

/// Worst |stddev(tau_k) - stddev(tau_{grid-k})| over interior mirrored
/// pairs; requires an even grid. Vacuously 0 for grid = 2.
double symmetry_check(const ScanResult& result);

struct RandomizedWalkResult {
    std::vector<std::vector<SpreadRecord>> per_seed;
    double mean_final_stddev = 0.0;
};

/// Runs the base walk once per seed with jittered inter-step intervals.
/// Identical seeds reproduce identical trajectories bit for bit.
RandomizedWalkResult randomized_walk(const WalkConfig& base,
                                     const ScheduleJitter& jitter,
                                     std::span<const std::uint64_t> seeds);

/// Evolve and collect one SpreadRecord per observed step (steps where
/// step % stride == 0, plus the final step).
std::vector<SpreadRecord> run_recorded(const WalkConfig& config, int stride = 1);

} // namespace strobowalk
