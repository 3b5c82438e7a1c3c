#include "strobowalk/walk.hpp"

#include <random>
#include <stdexcept>
#include <variant>

namespace strobowalk {

namespace {

// uniform double in [0, 1), portable across runs of the same build
double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate_domain(const SpectrumModel& model, long origin, int steps) {
    if (const auto* h = std::get_if<Harmonic>(&model.kind); h) {
        if (origin - steps <= 0)
            throw std::domain_error(
                "harmonic walk window would touch the ground state; start at "
                "origin > steps");
    }
    if (const auto* c = std::get_if<CustomTable>(&model.kind); c) {
        const long hi = c->lo + static_cast<long>(c->energies.size()) - 1;
        if (origin - steps < c->lo || origin + steps > hi)
            throw std::domain_error(
                "custom spectrum window does not cover the walk support");
    }
}

} // namespace

WalkerState evolve_resolved(const SpectrumModel& model, const CoinOperator& coin,
                            const ResolvedTau& tau, int steps, long origin,
                            cplx coin0, cplx coin1,
                            const std::optional<ScheduleJitter>& jitter,
                            const StateObserver& observe) {
    if (steps < 0) throw std::invalid_argument("steps must be non-negative");
    validate_domain(model, origin, steps);

    WalkerState state = initial_state(origin, steps, coin0, coin1);
    if (observe) observe(state);
    if (steps == 0) return state;

    const long lo = origin - steps;
    const long hi = origin + steps;
    std::vector<cplx> buf0, buf1;

    const bool jittered = jitter && jitter->half_width != 0.0;
    if (!jittered) {
        const PhaseTable phases = phase_table(model, tau, lo, hi);
        for (int k = 0; k < steps; ++k) {
            step_in_place(state, coin, phases, buf0, buf1);
            if (observe) observe(state);
        }
    } else {
        if (!(jitter->half_width >= 0.0 && jitter->half_width < 0.5))
            throw std::invalid_argument("jitter half-width must lie in [0, 0.5)");
        const double talbot = talbot_time(model);
        std::mt19937_64 rng(jitter->seed);
        for (int k = 0; k < steps; ++k) {
            const double u = 2.0 * canonical(rng) - 1.0;
            double interval = tau.value + u * jitter->half_width * talbot;
            if (interval < 0.0) interval = 0.0;
            const PhaseTable phases = phase_table(model, interval, lo, hi);
            step_in_place(state, coin, phases, buf0, buf1);
            if (observe) observe(state);
        }
    }
    return state;
}

WalkerState evolve(const WalkConfig& config, const StateObserver& observe) {
    const ResolvedTau tau = resolve_tau(config.tau, config.model);
    return evolve_resolved(config.model, config.coin, tau, config.steps,
                           config.origin, config.coin0, config.coin1,
                           config.jitter, observe);
}

} // namespace strobowalk
