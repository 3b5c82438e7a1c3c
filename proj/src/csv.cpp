#include "strobowalk/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace strobowalk {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

void write_preamble(std::ostream& os, std::string_view provenance) {
    os << "# " << provenance << "\n";
}

void check_sink(std::ostream& os) {
    if (!os) throw std::runtime_error("write to output sink failed");
}

} // namespace

void emit_distribution(std::ostream& os, const Distribution& dist,
                       const Distribution* classical,
                       std::string_view provenance) {
    if (classical && classical->offsets != dist.offsets)
        throw std::invalid_argument(
            "classical overlay offsets do not match the distribution");
    write_preamble(os, provenance);
    os << (classical ? "offset,prob,classical_prob\n" : "offset,prob\n");
    for (std::size_t i = 0; i < dist.offsets.size(); ++i) {
        os << dist.offsets[i] << ',' << format_double(dist.probabilities[i]);
        if (classical) os << ',' << format_double(classical->probabilities[i]);
        os << '\n';
    }
    check_sink(os);
}

void emit_trajectory(std::ostream& os, std::span<const SpreadRecord> records,
                     std::string_view provenance) {
    if (records.empty())
        throw std::invalid_argument("trajectory has no records to emit");
    write_preamble(os, provenance);
    os << "step,mean,stddev,rms,norm_error\n";
    for (const SpreadRecord& rec : records) {
        os << rec.step << ',' << format_double(rec.mean) << ','
           << format_double(rec.stddev) << ','
           << format_double(rec.rms_displacement) << ','
           << format_double(rec.norm_error) << '\n';
    }
    check_sink(os);
}

void emit_scan(std::ostream& os, const ScanResult& result,
               std::string_view provenance) {
    write_preamble(os, provenance);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (!result.per_step) {
        os << "k,tau_over_T,stddev,alpha,label\n";
        for (std::size_t k = 0; k < result.cells.size(); ++k) {
            const ScanCell& cell = result.cells[k];
            os << k << ',' << format_double(cell.tau_over_talbot) << ','
               << format_double(cell.walked ? cell.final_record.stddev : nan) << ','
               << format_double(cell.classified ? cell.alpha : nan) << ','
               << (cell.classified ? to_string(cell.regime) : "error") << '\n';
        }
    } else {
        os << "k,tau_over_T,step,stddev,stddev_over_sqrt_t\n";
        for (std::size_t k = 0; k < result.cells.size(); ++k) {
            const ScanCell& cell = result.cells[k];
            for (const SpreadRecord& rec : cell.per_step) {
                if (rec.step < 1) continue; // sigma/sqrt(t) undefined at t = 0
                os << k << ',' << format_double(cell.tau_over_talbot) << ','
                   << rec.step << ',' << format_double(rec.stddev) << ','
                   << format_double(rec.stddev /
                                    std::sqrt(static_cast<double>(rec.step)))
                   << '\n';
            }
        }
    }
    check_sink(os);
}

} // namespace strobowalk
