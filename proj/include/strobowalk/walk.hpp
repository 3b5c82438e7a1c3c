#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "strobowalk/coin.hpp"
#include "strobowalk/spectrum.hpp"
#include "strobowalk/walker_state.hpp"

namespace strobowalk {

/// Uniform jitter of the inter-step interval: each step draws
/// tau_k = tau + u_k with u_k uniform in +-(half_width * T), clamped to
/// keep tau_k >= 0. half_width is a fraction of the Talbot time in [0, 0.5).
struct ScheduleJitter {
    double half_width = 0.0;
    std::uint64_t seed = 0;
};

struct WalkConfig {
    SpectrumModel model = make_harmonic(1.0);
    CoinOperator coin = hadamard_coin();
    TauSpec tau = tau_rational(0, 1);
    int steps = 0;
    long origin = 0;
    cplx coin0 = kSymmetricCoin0;
    cplx coin1 = kSymmetricCoin1;
    std::optional<ScheduleJitter> jitter;
};

/// Called with the state at step 0 and after every step.
using StateObserver = std::function<void(const WalkerState&)>;

/// Runs the configured walk and returns the final state. Deterministic for
/// a fixed jitter seed. Harmonic walks whose window would touch site 0 are
/// rejected.
WalkerState evolve(const WalkConfig& config, const StateObserver& observe = {});

/// Same, with tau already resolved; lets callers pin exact fractions of the
/// Talbot time that TauSpec cannot express (e.g. tau = T itself).
WalkerState evolve_resolved(const SpectrumModel& model, const CoinOperator& coin,
                            const ResolvedTau& tau, int steps, long origin,
                            cplx coin0, cplx coin1,
                            const std::optional<ScheduleJitter>& jitter = {},
                            const StateObserver& observe = {});

} // namespace strobowalk
