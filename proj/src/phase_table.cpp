#include "strobowalk/phase_table.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace strobowalk {

PhaseTable::PhaseTable(long lo, std::vector<cplx> factors)
    : lo_(lo), factors_(std::move(factors)) {
    if (factors_.empty())
        throw std::invalid_argument("phase table must cover at least one site");
    for (const cplx& f : factors_)
        if (std::abs(std::abs(f) - 1.0) > 1e-12)
            throw std::invalid_argument("phase factors must have unit modulus");
}

cplx PhaseTable::factor(long n) const {
    if (n < lo_ || n > hi())
        throw std::out_of_range("site " + std::to_string(n) +
                                " outside phase table window");
    return factors_[static_cast<std::size_t>(n - lo_)];
}

} // namespace strobowalk
