#include "strobowalk/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace strobowalk {

Distribution distribution(const WalkerState& state) {
    const int t = state.step_count();
    Distribution dist;
    dist.step = t;
    dist.offsets.reserve(static_cast<std::size_t>(t) + 1);
    dist.probabilities.reserve(static_cast<std::size_t>(t) + 1);
    for (long off = -t; off <= t; off += 2) {
        dist.offsets.push_back(off);
        dist.probabilities.push_back(state.site_probability(state.origin() + off));
    }
    return dist;
}

SpreadRecord spread(const Distribution& dist, int step) {
    double total = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < dist.offsets.size(); ++i) {
        const double off = static_cast<double>(dist.offsets[i]);
        const double p = dist.probabilities[i];
        total += p;
        m1 += off * p;
        m2 += off * off * p;
    }
    double variance = m2 - m1 * m1;
    if (variance < 0.0) variance = 0.0;
    SpreadRecord rec;
    rec.step = step;
    rec.mean = m1;
    rec.stddev = std::sqrt(variance);
    rec.rms_displacement = std::sqrt(m2);
    rec.norm_error = std::abs(1.0 - total);
    return rec;
}

Distribution classical_reference(int step) {
    if (step < 1)
        throw std::invalid_argument("classical reference requires step >= 1");
    const double t = static_cast<double>(step);
    Distribution dist;
    dist.step = step;
    dist.offsets.reserve(static_cast<std::size_t>(step) + 1);
    dist.probabilities.reserve(static_cast<std::size_t>(step) + 1);
    // P(2k - t) = C(t, k) / 2^t, evaluated in log space
    for (int k = 0; k <= step; ++k) {
        const double logp = std::lgamma(t + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(t - k + 1.0) - t * std::numbers::ln2;
        dist.offsets.push_back(2L * k - step);
        dist.probabilities.push_back(std::exp(logp));
    }
    return dist;
}

ExponentFit growth_exponent(std::span<const SpreadRecord> series, FitRange range) {
    if (range.lo < 1 || range.hi < range.lo)
        throw std::invalid_argument("fit range must satisfy 1 <= lo <= hi");
    std::vector<double> xs, ys;
    for (const SpreadRecord& rec : series) {
        if (rec.step < range.lo || rec.step > range.hi) continue;
        if (!(rec.stddev > 0.0))
            throw std::invalid_argument(
                "growth exponent undefined: stddev is not positive at step " +
                std::to_string(rec.step));
        xs.push_back(std::log(static_cast<double>(rec.step)));
        ys.push_back(std::log(rec.stddev));
    }
    if (xs.size() < 10)
        throw std::invalid_argument("growth exponent needs >= 10 records in the "
                                    "fit range, got " + std::to_string(xs.size()));

    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double alpha = sxy / sxx;
    const double intercept = my - alpha * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (intercept + alpha * xs[i]);
        ss += r * r;
    }
    return {alpha, std::sqrt(ss / static_cast<double>(n))};
}

FitRange default_fit_range(int steps) { return {steps - steps / 2, steps}; }

} // namespace strobowalk
