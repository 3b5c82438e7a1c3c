#include "strobowalk/coin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace strobowalk {

namespace {

double residual_of(const std::array<cplx, 4>& e) {
    // C†C - I, max-norm over the four entries
    const cplx g00 = std::conj(e[0]) * e[0] + std::conj(e[2]) * e[2] - 1.0;
    const cplx g01 = std::conj(e[0]) * e[1] + std::conj(e[2]) * e[3];
    const cplx g10 = std::conj(e[1]) * e[0] + std::conj(e[3]) * e[2];
    const cplx g11 = std::conj(e[1]) * e[1] + std::conj(e[3]) * e[3] - 1.0;
    return std::max(std::max(std::abs(g00), std::abs(g01)),
                    std::max(std::abs(g10), std::abs(g11)));
}

} // namespace

CoinOperator::CoinOperator(cplx e00, cplx e01, cplx e10, cplx e11)
    : entries_{e00, e01, e10, e11} {
    if (residual_of(entries_) > 1e-12)
        throw std::invalid_argument("coin operator is not unitary");
}

double CoinOperator::unitarity_residual() const { return residual_of(entries_); }

CoinOperator hadamard_coin() {
    const double s = 1.0 / std::numbers::sqrt2;
    return CoinOperator{{s, 0.0}, {s, 0.0}, {s, 0.0}, {-s, 0.0}};
}

} // namespace strobowalk
