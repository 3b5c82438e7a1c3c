#include "strobowalk/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace strobowalk {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

// mathematical mod, result in [0, m)
std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

double reduce_mod_two_pi(double arg) {
    return std::remainder(arg, 2.0 * std::numbers::pi);
}

cplx unit_phase(double angle) {
    return angle == 0.0 ? cplx{1.0, 0.0} : std::polar(1.0, angle);
}

} // namespace

SpectrumModel make_harmonic(double omega) {
    if (!(omega > 0.0))
        throw std::invalid_argument("harmonic omega must be positive");
    return {Harmonic{omega}, 1};
}

SpectrumModel make_free_particle(double mass, double kick) {
    if (!(mass > 0.0))
        throw std::invalid_argument("free-particle mass must be positive");
    if (!(kick > 0.0))
        throw std::invalid_argument("free-particle momentum kick must be positive");
    return {FreeParticle{mass, kick}, 1};
}

SpectrumModel make_custom(CustomTable table, std::int64_t lambda) {
    if (table.energies.empty())
        throw std::invalid_argument("custom spectrum table is empty");
    if (lambda < 1)
        throw std::invalid_argument("rephasing integer lambda must be >= 1");
    return {std::move(table), lambda};
}

double energy(const SpectrumModel& model, long n) {
    return std::visit(
        overloaded{
            [&](const Harmonic& h) {
                if (n < 0)
                    throw std::domain_error(
                        "harmonic spectrum is defined for n >= 0 only");
                return h.omega * (static_cast<double>(n) + 0.5);
            },
            [&](const FreeParticle& f) {
                const double p = static_cast<double>(n) * f.kick;
                return p * p / (2.0 * f.mass);
            },
            [&](const CustomTable& c) {
                const long hi = c.lo + static_cast<long>(c.energies.size()) - 1;
                if (n < c.lo || n > hi)
                    throw std::domain_error("site " + std::to_string(n) +
                                            " outside custom spectrum window [" +
                                            std::to_string(c.lo) + ", " +
                                            std::to_string(hi) + "]");
                return c.energies[static_cast<std::size_t>(n - c.lo)];
            }},
        model.kind);
}

double talbot_time(const SpectrumModel& model) {
    return std::visit(
        overloaded{
            [&](const Harmonic& h) { return std::numbers::pi / h.omega; },
            [&](const FreeParticle& f) {
                return std::numbers::pi * f.mass / (f.kick * f.kick);
            },
            [&](const CustomTable& c) {
                if (c.talbot_override) return *c.talbot_override;
                if (c.energies.size() < 3)
                    throw std::invalid_argument(
                        "custom spectrum needs >= 3 entries to infer the Talbot "
                        "time; specify it explicitly");
                const double gap0 = c.energies[0] - c.energies[2];
                for (std::size_t i = 0; i + 2 < c.energies.size(); ++i) {
                    const double gap = c.energies[i] - c.energies[i + 2];
                    if (std::abs(gap - gap0) > 1e-12)
                        throw std::invalid_argument(
                            "custom spectrum gap E_n - E_{n+2} is not constant; "
                            "specify the Talbot time explicitly");
                }
                if (gap0 == 0.0)
                    throw std::invalid_argument(
                        "custom spectrum gap E_n - E_{n+2} vanishes; specify the "
                        "Talbot time explicitly");
                return 2.0 * std::numbers::pi *
                       static_cast<double>(model.rephasing_lambda) / std::abs(gap0);
            }},
        model.kind);
}

Rational reduce_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("fraction denominator is zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return g > 0 ? Rational{num / g, den / g} : Rational{0, 1};
}

TauSpec tau_rational(std::int64_t p, std::int64_t q) {
    if (q <= 0)
        throw std::invalid_argument("tau denominator q must be positive");
    if (q > (std::int64_t{1} << 60))
        throw std::invalid_argument("tau denominator q is too large");
    if (p < 0 || p >= q)
        throw std::invalid_argument("tau fraction p/q must lie in [0, 1)");
    return RationalOfTalbot{reduce_fraction(p, q)};
}

TauSpec tau_real(double x) {
    if (!(x >= 0.0 && x < 1.0))
        throw std::invalid_argument("tau multiple of T must lie in [0, 1)");
    return RealMultipleOfTalbot{x};
}

TauSpec tau_absolute(double value) {
    if (!(value >= 0.0) || !std::isfinite(value))
        throw std::invalid_argument("absolute tau must be finite and >= 0");
    return AbsoluteTau{value};
}

ResolvedTau resolve_tau(const TauSpec& spec, const SpectrumModel& model) {
    const double talbot = talbot_time(model);
    return std::visit(
        overloaded{
            [&](const RationalOfTalbot& r) {
                const double ratio = static_cast<double>(r.fraction.num) /
                                     static_cast<double>(r.fraction.den);
                return ResolvedTau{ratio * talbot, r.fraction};
            },
            [&](const RealMultipleOfTalbot& r) {
                return ResolvedTau{r.x * talbot, std::nullopt};
            },
            [&](const AbsoluteTau& a) {
                return ResolvedTau{std::fmod(a.value, talbot), std::nullopt};
            }},
        spec);
}

PhaseTable phase_table(const SpectrumModel& model, const ResolvedTau& tau,
                       long lo, long hi) {
    if (lo > hi)
        throw std::invalid_argument("phase table window is empty");
    std::vector<cplx> factors(static_cast<std::size_t>(hi - lo + 1));

    const bool harmonic = std::holds_alternative<Harmonic>(model.kind);
    const bool free_particle = std::holds_alternative<FreeParticle>(model.kind);

    if (tau.talbot_fraction && (harmonic || free_particle)) {
        // tau = (p/q) T. The model parameters cancel from E_n * tau, leaving
        // pi * p (2n+1) / (2q) for the oscillator and pi * p n^2 / (2q) for
        // the free particle, so the argument is reduced exactly on integers
        // modulo 4q before any trigonometry.
        if (harmonic && lo < 0)
            throw std::domain_error("harmonic spectrum is defined for n >= 0 only");
        const std::int64_t q = tau.talbot_fraction->den;
        const std::int64_t mod = 4 * q;
        const std::int64_t p = floor_mod(tau.talbot_fraction->num, mod);
        for (long n = lo; n <= hi; ++n) {
            std::int64_t m;
            if (harmonic) {
                m = mul_mod(p, floor_mod(2 * static_cast<std::int64_t>(n) + 1, mod),
                            mod);
            } else {
                const std::int64_t nm = floor_mod(n, mod);
                m = mul_mod(p, mul_mod(nm, nm, mod), mod);
            }
            const double angle =
                -std::numbers::pi *
                (static_cast<double>(m) / (2.0 * static_cast<double>(q)));
            factors[static_cast<std::size_t>(n - lo)] = unit_phase(angle);
        }
    } else {
        for (long n = lo; n <= hi; ++n) {
            const double arg = energy(model, n) * tau.value;
            factors[static_cast<std::size_t>(n - lo)] =
                unit_phase(-reduce_mod_two_pi(arg));
        }
    }
    return PhaseTable(lo, std::move(factors));
}

PhaseTable phase_table(const SpectrumModel& model, double tau, long lo, long hi) {
    return phase_table(model, ResolvedTau{tau, std::nullopt}, lo, hi);
}

CustomTable load_spectrum_table(std::istream& in) {
    std::map<long, double> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long index;
        double value;
        if (!(fields >> index)) continue; // blank or comment-only line
        if (!(fields >> value))
            throw std::invalid_argument("spectrum file line " +
                                        std::to_string(lineno) +
                                        ": expected `index energy`");
        std::string rest;
        if (fields >> rest)
            throw std::invalid_argument("spectrum file line " +
                                        std::to_string(lineno) +
                                        ": trailing fields after `index energy`");
        if (!entries.emplace(index, value).second)
            throw std::invalid_argument("spectrum file line " +
                                        std::to_string(lineno) +
                                        ": duplicate index " + std::to_string(index));
    }
    if (entries.empty())
        throw std::invalid_argument("spectrum file contains no entries");

    CustomTable table;
    table.lo = entries.begin()->first;
    long expected = table.lo;
    for (const auto& [index, value] : entries) {
        if (index != expected)
            throw std::invalid_argument("spectrum file indices must be contiguous; "
                                        "missing index " + std::to_string(expected));
        table.energies.push_back(value);
        ++expected;
    }
    return table;
}

CustomTable load_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectrum file: " + path);
    return load_spectrum_table(in);
}

} // namespace strobowalk
