#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "strobowalk/observables.hpp"
#include "strobowalk/scan.hpp"

namespace strobowalk {

/// 17 significant digits; round-trips any finite double through text.
std::string format_double(double value);

// Each emitter writes a '#'-prefixed provenance comment, a header row and
// LF-terminated data rows.

/// Header `offset,prob[,classical_prob]`, rows in increasing offset.
void emit_distribution(std::ostream& os, const Distribution& dist,
                       const Distribution* classical, std::string_view provenance);

/// Header `step,mean,stddev,rms,norm_error`, one row per record.
void emit_trajectory(std::ostream& os, std::span<const SpreadRecord> records,
                     std::string_view provenance);

/// Scan mode: `k,tau_over_T,stddev,alpha,label`. Surface mode (per-step
/// results recorded): `k,tau_over_T,step,stddev,stddev_over_sqrt_t`, rows
/// ordered by (k, step), starting at step 1.
void emit_scan(std::ostream& os, const ScanResult& result,
               std::string_view provenance);

} // namespace strobowalk
