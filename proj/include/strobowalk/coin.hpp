#pragma once

#include <array>
#include <utility>

#include "strobowalk/types.hpp"

namespace strobowalk {

/// 2x2 unitary acting on the coin factor. Construction rejects matrices
/// whose unitarity residual max|C†C - I| exceeds 1e-12.
class CoinOperator {
public:
    CoinOperator(cplx e00, cplx e01, cplx e10, cplx e11);

    cplx at(int row, int col) const { return entries_[2 * row + col]; }

    // Apply to a coin-amplitude pair.
    std::pair<cplx, cplx> apply(cplx a0, cplx a1) const {
        return {entries_[0] * a0 + entries_[1] * a1,
                entries_[2] * a0 + entries_[3] * a1};
    }

    /// max-norm residual of C†C - I.
    double unitarity_residual() const;

private:
    std::array<cplx, 4> entries_;
};

/// The balanced coin (1/sqrt 2)[[1,1],[1,-1]].
CoinOperator hadamard_coin();

} // namespace strobowalk
