#pragma once

#include <complex>

#include "qrod/grid.hpp"
#include "qrod/parameters.hpp"
#include "qrod/warnings.hpp"

namespace qrod {

/// The short-time propagator is trusted while the dimensionless ratio
/// 2 hbar sinh(Omega t) / (I Omega) stays small: below kValidityThreshold
/// it is considered valid, between the threshold and kValidityHardLimit
/// operations warn, above the hard limit they refuse to run.
inline constexpr double kValidityThreshold = 0.1;
inline constexpr double kValidityHardLimit = 1.0;

/// asinh-argument bound below which the tipping time is effectively in its
/// linearized (t ~ I sigma^2 / hbar) regime.
inline constexpr double kLinearizedThreshold = 0.3;

struct PropagatorValidity {
    double time;    ///< [s]
    double ratio;   ///< 2 hbar sinh(Omega t) / (I Omega), strictly increasing in t
    bool is_valid;  ///< ratio < kValidityThreshold
};

PropagatorValidity propagator_validity(const RodParameters& params, double t);

/// alpha = I Omega / (2 hbar sinh(Omega t)), the inverse of the validity
/// ratio. Diverges as t -> 0+. Requires t > 0.
double alpha_factor(const RodParameters& params, double t);

/// Monotonic solution of theta'' = Omega^2 theta with theta(0) = theta1,
/// theta(t) = theta2, evaluated at tau in [0, t]. Rejects t = 0 (the
/// boundary-value problem degenerates).
double classical_trajectory(const RodParameters& params, double theta1, double theta2,
                            double t, double tau);

/// Action of the trajectory above under the inverted-oscillator Lagrangian:
///
///   S = (I Omega / 2 sinh(Omega t)) ((theta1^2 + theta2^2) cosh(Omega t) - 2 theta1 theta2)
///
/// Symmetric in theta1 <-> theta2. Rejects t = 0.
double classical_action(const RodParameters& params, double theta1, double theta2, double t);

/// Short-time propagator G(theta2, t; theta1, 0):
///
///   sqrt(I Omega / (2 pi i hbar sinh(Omega t))) exp(i S_class / hbar)
///
/// The prefactor square root is taken on the principal branch, a constant
/// phase exp(-i pi/4); sinh(Omega t) > 0 for all t > 0, so no further
/// branch tracking arises. |G| is independent of the endpoints.
///
/// Warns when the validity ratio is in the marginal band; throws
/// ValidityError (carrying the ratio) above the hard limit or for t <= 0.
std::complex<double> propagator(const RodParameters& params, double theta1, double theta2,
                                double t, WarningLog* warnings = nullptr);

/// Closed form of the wall-to-wall overlap integral
/// int G*(theta,t;theta',0) G(theta',t;0,0) dtheta':
///
///   |G(0,t;0,0)|^2 exp(-i alpha theta^2 cosh(Omega t)) sin(alpha pi theta / 2)/(alpha theta)
///
/// which tends to a delta function as alpha -> infinity. The theta -> 0
/// limit |G|^2 pi/2 is taken analytically. Requires t > 0.
std::complex<double> unitarity_kernel(const RodParameters& params, double theta, double t);

/// psi(theta, t) for the Gaussian initial state, in closed form (the
/// propagator integral extended to the whole line, erf(pi/2sigma) ~ 1).
/// t = 0 returns the exact limit of the closed form. Validity handling as
/// in propagator().
std::complex<double> analytic_wavefunction(const RodParameters& params, const GaussianState& state,
                                           double theta, double t, WarningLog* warnings = nullptr);

/// Samples analytic_wavefunction on a grid.
WaveFunction evolve_analytic(const RodParameters& params, const GaussianState& state, double t,
                             const AngularGrid& grid, WarningLog* warnings = nullptr);

/// Probability density of the evolved state:
///
///   P(theta,t) = I Omega sigma / (sqrt(pi) sqrt(D)) exp(-(I Omega)^2 sigma^2 theta^2 / D),
///   D(t) = hbar^2 sinh^2(Omega t) + (I Omega)^2 sigma^4 cosh^2(Omega t)
///
/// Defined for all t >= 0 (D > 0 throughout; t = 0 gives the initial
/// Gaussian with unit erf factor). Matches |analytic_wavefunction|^2
/// pointwise.
double density_analytic(const RodParameters& params, const GaussianState& state,
                        double theta, double t);

/// Natural log of density_analytic, usable far below the smallest positive
/// double (classical-limit sequences underflow the density itself).
double log_density_analytic(const RodParameters& params, const GaussianState& state,
                            double theta, double t);

/// Time at which P(theta, .) attains its interior maximum, located by a
/// coarse log-spaced scan over the validity window followed by
/// golden-section refinement (extended precision) to 1e-10 relative in t.
///
/// An interior maximum exists only for |theta| > sigma/sqrt(2); theta = 0
/// and angles inside that disc are rejected with DomainError.
double density_peak_time(const RodParameters& params, const GaussianState& state, double theta);

/// Tipping time: the instant the density maximum crosses theta = +-sigma,
///
///   t_tip = (1/Omega) asinh( I Omega sigma^2 / sqrt(hbar^2 + (I Omega)^2 sigma^4) )
///
/// Requires sigma in (0, pi/2).
double tipping_time_exact(const RodParameters& params, double sigma);

/// Algebraically identical form written in the bare rod variables,
///
///   t_tip = (sqrt(kappa)/omega) asinh( sqrt(kappa) m a^2 omega sigma^2
///            / sqrt(hbar^2 + kappa m^2 a^4 omega^2 sigma^4) )
///
/// kept as an independent evaluation path for consistency checks.
double tipping_time_exact_rod_form(const RodParameters& params, double sigma);

/// Quantum-domain approximation (sigma^4 term dropped in the denominator):
/// (sqrt(kappa)/omega) asinh(sqrt(kappa) m a^2 omega sigma^2 / hbar).
/// Warns outside the quantum regime.
double tipping_time_quantum_approx(const RodParameters& params, double sigma,
                                   WarningLog* warnings = nullptr);

/// Linearized tipping time I sigma^2 / hbar.
double tipping_time_linearized(const RodParameters& params, double sigma);

/// Delta-theta times Delta-l estimated from the tipping motion:
/// sigma * I (sigma / t_tip) = I sigma^2 / t_tip. Equals hbar exactly when
/// the linearized tipping time is used.
struct UncertaintyProduct {
    double product_exact;       ///< I sigma^2 / t_tip_exact [J s]
    double product_linearized;  ///< I sigma^2 / t_tip_linearized == hbar
    double ratio_to_hbar;       ///< product_exact / hbar
    double asinh_argument;      ///< regime indicator for the linearization
    bool linearized_regime;     ///< asinh_argument < kLinearizedThreshold
};

UncertaintyProduct uncertainty_product(const RodParameters& params, double sigma,
                                       WarningLog* warnings = nullptr);

/// Everything the tipping-time CLI reports for one configuration.
struct TippingReport {
    double sigma;
    double t_tip_exact;
    double t_tip_quantum_approx;
    double t_tip_linearized;
    PropagatorValidity validity;  ///< evaluated at t_tip_exact
    Regime regime;
};

TippingReport tipping_report(const RodParameters& params, double sigma,
                             WarningLog* warnings = nullptr);

} // namespace qrod
