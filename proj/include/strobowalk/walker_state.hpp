#pragma once

#include <vector>

#include "strobowalk/coin.hpp"
#include "strobowalk/phase_table.hpp"
#include "strobowalk/types.hpp"

namespace strobowalk {

/// Full quantum state of the walker: a pair of complex amplitudes
/// (coin 0, coin 1) per site of a dense window of width 2*capacity + 1
/// centered on the origin. Amplitudes stay exactly zero outside the
/// light cone |n - origin| <= step_count and on sites whose offset
/// parity differs from the parity of step_count.
class WalkerState {
public:
    WalkerState(long origin, int capacity, cplx coin0, cplx coin1);

    long origin() const { return origin_; }
    int step_count() const { return step_count_; }
    int capacity() const { return capacity_; }
    long window_lo() const { return origin_ - capacity_; }
    long window_hi() const { return origin_ + capacity_; }

    /// Amplitudes by lattice index; sites outside the stored window are
    /// exactly zero.
    cplx amp0(long n) const;
    cplx amp1(long n) const;

    double site_probability(long n) const;
    double norm_squared() const;
    double norm_error() const;

private:
    long origin_;
    int capacity_;
    int step_count_ = 0;
    std::vector<cplx> c0_, c1_; // index (n - origin + capacity)

    friend void step_in_place(WalkerState&, const CoinOperator&, const PhaseTable&,
                              std::vector<cplx>&, std::vector<cplx>&);
};

/// State with all amplitude at `origin`, step count 0 and the given coin
/// amplitudes (default: the symmetric pair). The pair must be normalized
/// within 1e-12. `capacity` fixes the largest reachable step count.
WalkerState initial_state(long origin, int capacity,
                          cplx coin0 = kSymmetricCoin0,
                          cplx coin1 = kSymmetricCoin1);

/// One stroboscopic step: per-site phase, then coin, then conditional
/// shift (coin-0 mass to n+1, coin-1 mass to n-1). The phase table must
/// cover [origin - (t+1), origin + (t+1)] for the current step count t.
WalkerState step(const WalkerState& state, const CoinOperator& coin,
                 const PhaseTable& phases);

/// In-place variant reusing scratch buffers; used by the evolution loop.
void step_in_place(WalkerState& state, const CoinOperator& coin,
                   const PhaseTable& phases,
                   std::vector<cplx>& scratch0, std::vector<cplx>& scratch1);

} // namespace strobowalk
