#include "strobowalk/scan.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strobowalk {

const char* to_string(Regime regime) {
    switch (regime) {
    case Regime::ballistic: return "ballistic";
    case Regime::superclassical: return "superclassical";
    case Regime::classical: return "classical";
    case Regime::localized: return "localized";
    }
    return "unknown";
}

Classification classify(std::span<const SpreadRecord> series, FitRange range) {
    const ExponentFit fit = growth_exponent(series, range);
    Regime regime;
    if (fit.alpha >= 0.9)
        regime = Regime::ballistic;
    else if (fit.alpha >= 0.6)
        regime = Regime::superclassical;
    else if (fit.alpha >= 0.4)
        regime = Regime::classical;
    else
        regime = Regime::localized;
    return {regime, fit.alpha, fit.rms_residual};
}

std::vector<SpreadRecord> run_recorded(const WalkConfig& config, int stride) {
    if (stride < 1) throw std::invalid_argument("record stride must be >= 1");
    std::vector<SpreadRecord> records;
    records.reserve(static_cast<std::size_t>(config.steps / stride) + 2);
    evolve(config, [&](const WalkerState& state) {
        const int t = state.step_count();
        if (t % stride == 0 || t == config.steps)
            records.push_back(spread(distribution(state), t));
    });
    return records;
}

namespace {

ScanCell run_cell(const WalkConfig& base, int grid, int k, bool keep_per_step) {
    ScanCell cell;
    cell.tau_fraction = reduce_fraction(k, grid);
    cell.tau_over_talbot = static_cast<double>(k) / static_cast<double>(grid);
    try {
        WalkConfig cfg = base;
        cfg.tau = RationalOfTalbot{cell.tau_fraction};
        cfg.jitter.reset(); // scan cells are deterministic
        std::vector<SpreadRecord> records = run_recorded(cfg);
        cell.walked = true;
        cell.final_record = records.back();
        try {
            const Classification cls =
                classify(records, default_fit_range(cfg.steps));
            cell.classified = true;
            cell.alpha = cls.alpha;
            cell.fit_residual = cls.rms_residual;
            cell.regime = cls.regime;
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
        if (keep_per_step) cell.per_step = std::move(records);
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
    return cell;
}

} // namespace

ScanResult tau_scan(const WalkConfig& base, int grid, bool record_per_step,
                    int threads) {
    if (grid < 2) throw std::invalid_argument("scan grid must be >= 2");
    if (threads < 0) throw std::invalid_argument("thread count must be >= 0");

    ScanResult result{base.model, base.steps, grid, record_per_step, {}};
    result.cells.resize(static_cast<std::size_t>(grid));

    if (threads == 1) {
        // serial reference; the parallel path must reproduce it byte for byte
        for (int k = 0; k < grid; ++k)
            result.cells[static_cast<std::size_t>(k)] =
                run_cell(base, grid, k, record_per_step);
        return result;
    }

#ifdef _OPENMP
    const int nt = threads == 0 ? omp_get_max_threads() : threads;
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int k = 0; k < grid; ++k)
        result.cells[static_cast<std::size_t>(k)] =
            run_cell(base, grid, k, record_per_step);
#else
    for (int k = 0; k < grid; ++k)
        result.cells[static_cast<std::size_t>(k)] =
            run_cell(base, grid, k, record_per_step);
#endif
    return result;
}

double symmetry_check(const ScanResult& result) {
    if (result.grid % 2 != 0)
        throw std::invalid_argument(
            "symmetry check requires an even grid so mirrored pairs align");
    double worst = 0.0;
    for (int k = 1; k < result.grid / 2; ++k) {
        const ScanCell& a = result.cells[static_cast<std::size_t>(k)];
        const ScanCell& b = result.cells[static_cast<std::size_t>(result.grid - k)];
        if (!a.walked || !b.walked)
            throw std::runtime_error("symmetry check on a scan with failed cells: " +
                                     (a.error.empty() ? b.error : a.error));
        const double diff =
            std::abs(a.final_record.stddev - b.final_record.stddev);
        if (diff > worst) worst = diff;
    }
    return worst;
}

RandomizedWalkResult randomized_walk(const WalkConfig& base,
                                     const ScheduleJitter& jitter,
                                     std::span<const std::uint64_t> seeds) {
    if (seeds.empty())
        throw std::invalid_argument("randomized walk needs at least one seed");
    if (!(jitter.half_width >= 0.0 && jitter.half_width < 0.5))
        throw std::invalid_argument("jitter half-width must lie in [0, 0.5)");

    RandomizedWalkResult result;
    result.per_seed.reserve(seeds.size());
    double sum = 0.0;
    for (const std::uint64_t seed : seeds) {
        WalkConfig cfg = base;
        cfg.jitter = ScheduleJitter{jitter.half_width, seed};
        result.per_seed.push_back(run_recorded(cfg));
        sum += result.per_seed.back().back().stddev;
    }
    result.mean_final_stddev = sum / static_cast<double>(seeds.size());
    return result;
}

} // namespace strobowalk
