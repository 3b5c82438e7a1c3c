#pragma once

// Test-only oracle: one stroboscopic step built explicitly as a dense
// unitary on a finite window, with phases taken straight from
// exp(-i E_n tau). Kept independent of the library's kernel and of its
// modular phase reduction so it can stand as a second route.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

class DenseWalk {
public:
    // basis index b = 2 * (n - lo) + coin
    DenseWalk(long lo, long hi, const std::function<double(long)>& site_energy,
              double tau, const std::array<cplx, 4>& coin)
        : lo_(lo), width_(static_cast<std::size_t>(hi - lo + 1)),
          dim_(2 * width_), matrix_(dim_ * dim_) {
        for (long n = lo; n <= hi; ++n) {
            const cplx phase = std::exp(cplx(0.0, -site_energy(n) * tau));
            for (int cin = 0; cin < 2; ++cin) {
                const std::size_t col = 2 * static_cast<std::size_t>(n - lo) + cin;
                // coin output 0 shifts right, output 1 shifts left
                if (n + 1 <= hi)
                    at(2 * static_cast<std::size_t>(n + 1 - lo) + 0, col) +=
                        coin[0 * 2 + cin] * phase;
                if (n - 1 >= lo)
                    at(2 * static_cast<std::size_t>(n - 1 - lo) + 1, col) +=
                        coin[1 * 2 + cin] * phase;
            }
        }
    }

    std::size_t dim() const { return dim_; }
    long lo() const { return lo_; }

    std::vector<cplx> initial(long origin, cplx a0, cplx a1) const {
        std::vector<cplx> v(dim_);
        v[2 * static_cast<std::size_t>(origin - lo_) + 0] = a0;
        v[2 * static_cast<std::size_t>(origin - lo_) + 1] = a1;
        return v;
    }

    std::vector<cplx> apply(const std::vector<cplx>& v) const {
        std::vector<cplx> out(dim_);
        for (std::size_t r = 0; r < dim_; ++r) {
            cplx acc{};
            for (std::size_t c = 0; c < dim_; ++c)
                acc += matrix_[r * dim_ + c] * v[c];
            out[r] = acc;
        }
        return out;
    }

    cplx amp(const std::vector<cplx>& v, long n, int coin) const {
        return v[2 * static_cast<std::size_t>(n - lo_) + coin];
    }

private:
    cplx& at(std::size_t row, std::size_t col) { return matrix_[row * dim_ + col]; }

    long lo_;
    std::size_t width_;
    std::size_t dim_;
    std::vector<cplx> matrix_;
};

} // namespace oracle
