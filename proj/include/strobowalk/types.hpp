#pragma once

#include <complex>
#include <numbers>

namespace strobowalk {

using cplx = std::complex<double>;

// Initial coin amplitudes (|0> + i|1>)/sqrt(2), the symmetric default.
inline const cplx kSymmetricCoin0{1.0 / std::numbers::sqrt2, 0.0};
inline const cplx kSymmetricCoin1{0.0, 1.0 / std::numbers::sqrt2};

} // namespace strobowalk
