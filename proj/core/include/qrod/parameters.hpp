#pragma once

#include <string>

#include "qrod/errors.hpp"
#include "qrod/warnings.hpp"

namespace qrod {

/// CODATA 2018 reduced Planck constant [J s]. Used whenever a config does
/// not set hbar explicitly.
inline constexpr double kCodataHbar = 1.054571817e-34;

/// Emit a warning (not an error) when the initial localization width
/// exceeds this value; the narrow-packet expansion assumes sigma << 1.
inline constexpr double kSigmaWarnThreshold = 0.3;

/// Physical constants of the pivoted rod. The rod is uniform, pivoted at
/// its lower end, with centre of mass a distance `half_length` from the
/// pivot, and moves in the vertical plane only.
struct RodParameters {
    double mass = 1.0;          ///< m [kg]
    double half_length = 1.0;   ///< a [m], pivot-to-centre distance
    double gravity = 1.0;       ///< g [m s^-2]
    double hbar = kCodataHbar;  ///< [J s]; a free dial for classical-limit sweeps

    /// Natural units m = a = g = 1 with hbar as the only knob.
    static RodParameters natural(double hbar_value) {
        return RodParameters{1.0, 1.0, 1.0, hbar_value};
    }
};

/// Quantities derived from RodParameters.
///
/// kappa is stored as the exact constant 4/3 (uniform rod about one end),
/// not recomputed from a rounded division, so I = kappa*m*a^2 and
/// kappa = I/(m a^2) hold by construction.
struct DerivedParameters {
    double moment_of_inertia;  ///< I = (4/3) m a^2 [kg m^2]
    double kappa;              ///< I/(m a^2) = 4/3
    double omega;              ///< sqrt(g/a) [s^-1], curvature scale of the potential top
    double effective_mass;     ///< M = I/a^2 [kg]
    double growth_rate;        ///< Omega = sqrt(m/M) omega [s^-1], unstable-mode rate
    double de_broglie_ratio;   ///< hbar/(m a^2 omega), >1 marks the quantum domain

    /// M a^2 Omega = I Omega [J s] — the action scale that appears
    /// throughout the short-time propagator.
    double action_scale() const { return moment_of_inertia * growth_rate; }
};

/// Computes the derived quantities. Throws DomainError naming the first
/// offending field if any input is non-positive or non-finite.
DerivedParameters derive(const RodParameters& params);

enum class Regime { Quantum, Classical, Intermediate };

const char* to_string(Regime regime);

/// Quantum iff de_broglie_ratio > 1, Classical iff < 0.01, else Intermediate.
Regime classical_regime(const DerivedParameters& derived);
Regime classical_regime(const RodParameters& params);

/// Initial state: a Gaussian of width sigma centred on the unstable
/// equilibrium, normalized exactly on [-pi/2, pi/2]:
///
///   psi(theta, 0) = exp(-theta^2 / 2 sigma^2) / sqrt(sqrt(pi) sigma erf(pi/2sigma))
///
/// Vanishing mean angle and mean angular momentum follow from the even,
/// real profile.
struct GaussianState {
    double sigma;          ///< localization width [rad], 0 < sigma < pi/2
    double normalization;  ///< 1/sqrt(sqrt(pi) sigma erf(pi/(2 sigma)))

    double amplitude(double theta) const;  ///< psi(theta, 0); zero outside [-pi/2, pi/2]
    double density(double theta) const;    ///< |psi(theta, 0)|^2
};

/// Builds the initial state. Throws DomainError unless 0 < sigma < pi/2;
/// warns for sigma above kSigmaWarnThreshold.
GaussianState make_gaussian(double sigma, WarningLog* warnings = nullptr);

} // namespace qrod
