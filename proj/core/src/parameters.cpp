#include "qrod/parameters.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qrod {

namespace {

void require_positive(double value, const char* field) {
    if (!(std::isfinite(value) && value > 0.0)) {
        std::ostringstream msg;
        msg << "rod parameter '" << field << "' must be positive and finite, got " << value;
        throw DomainError(msg.str());
    }
}

} // namespace

DerivedParameters derive(const RodParameters& params) {
    require_positive(params.mass, "mass");
    require_positive(params.half_length, "half_length");
    require_positive(params.gravity, "gravity");
    require_positive(params.hbar, "hbar");

    DerivedParameters d;
    const double ma2 = params.mass * params.half_length * params.half_length;
    d.kappa = 4.0 / 3.0;
    d.moment_of_inertia = d.kappa * ma2;
    d.omega = std::sqrt(params.gravity / params.half_length);
    d.effective_mass = d.moment_of_inertia / (params.half_length * params.half_length);
    d.growth_rate = std::sqrt(params.mass / d.effective_mass) * d.omega;
    d.de_broglie_ratio = params.hbar / (ma2 * d.omega);
    return d;
}

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::Quantum: return "quantum";
        case Regime::Classical: return "classical";
        case Regime::Intermediate: return "intermediate";
    }
    return "unknown";
}

Regime classical_regime(const DerivedParameters& derived) {
    if (derived.de_broglie_ratio > 1.0) return Regime::Quantum;
    if (derived.de_broglie_ratio < 0.01) return Regime::Classical;
    return Regime::Intermediate;
}

Regime classical_regime(const RodParameters& params) {
    return classical_regime(derive(params));
}

double GaussianState::amplitude(double theta) const {
    if (std::abs(theta) > std::numbers::pi / 2.0) return 0.0;
    return normalization * std::exp(-theta * theta / (2.0 * sigma * sigma));
}

double GaussianState::density(double theta) const {
    const double psi = amplitude(theta);
    return psi * psi;
}

GaussianState make_gaussian(double sigma, WarningLog* warnings) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(std::isfinite(sigma) && sigma > 0.0 && sigma < half_pi)) {
        std::ostringstream msg;
        msg << "sigma must lie in (0, pi/2), got " << sigma;
        throw DomainError(msg.str());
    }
    if (sigma > kSigmaWarnThreshold) {
        std::ostringstream msg;
        msg << "sigma = " << sigma << " exceeds " << kSigmaWarnThreshold
            << "; the narrow-packet approximation degrades for wide initial states";
        warn(warnings, msg.str());
    }

    GaussianState state;
    state.sigma = sigma;
    state.normalization =
        1.0 / std::sqrt(std::sqrt(std::numbers::pi) * sigma * std::erf(half_pi / sigma));
    return state;
}

} // namespace qrod
