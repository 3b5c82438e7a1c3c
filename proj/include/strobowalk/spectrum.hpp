#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strobowalk/phase_table.hpp"
#include "strobowalk/types.hpp"

namespace strobowalk {

// Units: hbar = 1 throughout.

/// E_n = omega * (n + 1/2), defined for n >= 0.
struct Harmonic {
    double omega = 1.0;
};

/// E_n = (n * kick)^2 / (2 * mass), defined for all integers n.
struct FreeParticle {
    double mass = 1.0;
    double kick = 1.0;
};

/// Tabulated energies over a contiguous index window starting at `lo`.
/// `talbot_override`, when set, bypasses the gap-based Talbot time.
struct CustomTable {
    long lo = 0;
    std::vector<double> energies;
    std::optional<double> talbot_override;
};

struct SpectrumModel {
    std::variant<Harmonic, FreeParticle, CustomTable> kind;
    std::int64_t rephasing_lambda = 1;
};

SpectrumModel make_harmonic(double omega);
SpectrumModel make_free_particle(double mass, double kick);
SpectrumModel make_custom(CustomTable table, std::int64_t lambda = 1);

/// E_n for the model; throws std::domain_error outside the model's domain.
double energy(const SpectrumModel& model, long n);

/// Smallest interval after which adjacent occupied sites rephase by full
/// turns: pi/omega (harmonic), pi*mass/kick^2 (free particle), and
/// 2*pi*lambda / |E_n - E_{n+2}| for tables, whose gap must be constant
/// across the window within 1e-12.
double talbot_time(const SpectrumModel& model);

/// Reduced fraction, den > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

Rational reduce_fraction(std::int64_t num, std::int64_t den);

/// Inter-step interval given as a fraction p/q of the Talbot time, in [0, 1).
struct RationalOfTalbot {
    Rational fraction;
};

/// Interval x * T with real x in [0, 1).
struct RealMultipleOfTalbot {
    double x = 0.0;
};

/// Interval in absolute time units, reduced into [0, T) on resolution.
struct AbsoluteTau {
    double value = 0.0;
};

using TauSpec = std::variant<RationalOfTalbot, RealMultipleOfTalbot, AbsoluteTau>;

TauSpec tau_rational(std::int64_t p, std::int64_t q);
TauSpec tau_real(double x);
TauSpec tau_absolute(double value);

/// Interval in absolute time; `talbot_fraction` is kept whenever tau is an
/// exact rational multiple of the Talbot time, so phase arguments can be
/// reduced on integers instead of doubles.
struct ResolvedTau {
    double value = 0.0;
    std::optional<Rational> talbot_fraction;
};

ResolvedTau resolve_tau(const TauSpec& spec, const SpectrumModel& model);

/// Factors e^{-i E_n tau} for n in [lo, hi], arguments reduced modulo 2*pi
/// before trigonometric evaluation. For the two closed-form models with a
/// rational tau/T the reduction is exact on integers.
PhaseTable phase_table(const SpectrumModel& model, const ResolvedTau& tau,
                       long lo, long hi);
PhaseTable phase_table(const SpectrumModel& model, double tau, long lo, long hi);

/// Two whitespace-separated columns per line (integer index, energy);
/// '#' starts a comment. Indices must form a contiguous range.
CustomTable load_spectrum_table(std::istream& in);
CustomTable load_spectrum_file(const std::string& path);

} // namespace strobowalk
