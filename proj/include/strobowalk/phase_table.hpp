#pragma once

#include <vector>

#include "strobowalk/types.hpp"

namespace strobowalk {

/// One unit-modulus factor per lattice site on a contiguous window.
/// Construction rejects factors whose modulus deviates from 1 by more
/// than 1e-12.
class PhaseTable {
public:
    PhaseTable(long lo, std::vector<cplx> factors);

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(factors_.size()) - 1; }
    bool covers(long lo, long hi) const { return lo_ <= lo && hi <= this->hi(); }

    /// Factor for lattice site n; n must lie inside [lo, hi].
    cplx factor(long n) const;

    const cplx* data() const { return factors_.data(); }

private:
    long lo_;
    std::vector<cplx> factors_;
};

} // namespace strobowalk
