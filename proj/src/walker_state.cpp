#include "strobowalk/walker_state.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace strobowalk {

WalkerState::WalkerState(long origin, int capacity, cplx coin0, cplx coin1)
    : origin_(origin), capacity_(capacity) {
    if (capacity < 0)
        throw std::invalid_argument("walker capacity must be non-negative");
    const double norm2 = std::norm(coin0) + std::norm(coin1);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument(
            "initial coin amplitudes must be normalized (|a0|^2 + |a1|^2 = 1)");
    c0_.assign(2 * static_cast<std::size_t>(capacity) + 1, cplx{});
    c1_.assign(2 * static_cast<std::size_t>(capacity) + 1, cplx{});
    c0_[static_cast<std::size_t>(capacity)] = coin0;
    c1_[static_cast<std::size_t>(capacity)] = coin1;
}

cplx WalkerState::amp0(long n) const {
    if (n < window_lo() || n > window_hi()) return cplx{};
    return c0_[static_cast<std::size_t>(n - window_lo())];
}

cplx WalkerState::amp1(long n) const {
    if (n < window_lo() || n > window_hi()) return cplx{};
    return c1_[static_cast<std::size_t>(n - window_lo())];
}

double WalkerState::site_probability(long n) const {
    return std::norm(amp0(n)) + std::norm(amp1(n));
}

double WalkerState::norm_squared() const {
    double total = 0.0;
    for (std::size_t i = 0; i < c0_.size(); ++i)
        total += std::norm(c0_[i]) + std::norm(c1_[i]);
    return total;
}

double WalkerState::norm_error() const { return std::abs(1.0 - norm_squared()); }

void step_in_place(WalkerState& state, const CoinOperator& coin,
                   const PhaseTable& phases,
                   std::vector<cplx>& scratch0, std::vector<cplx>& scratch1) {
    const int t = state.step_count_;
    const long n0 = state.origin_;
    if (t + 1 > state.capacity_)
        throw std::runtime_error("walker window exhausted after " +
                                 std::to_string(t) + " steps; enlarge capacity");
    if (!phases.covers(n0 - (t + 1), n0 + (t + 1)))
        throw std::runtime_error(
            "phase table window [" + std::to_string(phases.lo()) + ", " +
            std::to_string(phases.hi()) + "] does not cover [" +
            std::to_string(n0 - (t + 1)) + ", " + std::to_string(n0 + (t + 1)) + "]");

    const std::size_t size = state.c0_.size();
    scratch0.assign(size, cplx{});
    scratch1.assign(size, cplx{});

    const cplx h00 = coin.at(0, 0), h01 = coin.at(0, 1);
    const cplx h10 = coin.at(1, 0), h11 = coin.at(1, 1);
    const long cap = state.capacity_;
    const cplx* fac = phases.data();
    const long fbase = n0 - phases.lo();

    // Occupied sites share the parity of t and sit inside the light cone.
    for (long d = -t; d <= t; d += 2) {
        const std::size_t w = static_cast<std::size_t>(cap + d);
        const cplx f = fac[fbase + d];
        const cplx a0 = f * state.c0_[w];
        const cplx a1 = f * state.c1_[w];
        scratch0[w + 1] = h00 * a0 + h01 * a1; // coin-0 mass moves right
        scratch1[w - 1] = h10 * a0 + h11 * a1; // coin-1 mass moves left
    }

    state.c0_.swap(scratch0);
    state.c1_.swap(scratch1);
    ++state.step_count_;
}

WalkerState initial_state(long origin, int capacity, cplx coin0, cplx coin1) {
    return WalkerState(origin, capacity, coin0, coin1);
}

WalkerState step(const WalkerState& state, const CoinOperator& coin,
                 const PhaseTable& phases) {
    WalkerState next = state;
    std::vector<cplx> b0, b1;
    step_in_place(next, coin, phases, b0, b1);
    return next;
}

} // namespace strobowalk
