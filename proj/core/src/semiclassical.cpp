#include "qrod/semiclassical.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qrod {

namespace {

constexpr double kPi = std::numbers::pi;

struct Scales {
    double hbar;
    double rate;          // Omega
    double action_scale;  // I Omega
};

Scales scales_of(const RodParameters& params) {
    const DerivedParameters d = derive(params);
    return Scales{params.hbar, d.growth_rate, d.action_scale()};
}

void require_positive_time(double t, const char* op) {
    if (!(std::isfinite(t) && t > 0.0)) {
        std::ostringstream msg;
        msg << op << ": t must be positive, got " << t
            << " (the fixed-endpoint problem degenerates at t = 0)";
        throw DomainError(msg.str());
    }
}

/// Shared validity gate: warn inside [threshold, hard limit), throw above.
void gate_validity(const Scales& s, double t, const char* op, WarningLog* warnings) {
    require_positive_time(t, op);
    const double ratio = 2.0 * s.hbar * std::sinh(s.rate * t) / s.action_scale;
    if (ratio >= kValidityHardLimit) {
        std::ostringstream msg;
        msg << op << ": short-time propagator has broken down at t = " << t
            << " (validity ratio " << ratio << " >= " << kValidityHardLimit << ")";
        throw ValidityError(msg.str(), ratio);
    }
    if (ratio >= kValidityThreshold) {
        std::ostringstream msg;
        msg << op << ": validity ratio " << ratio << " at t = " << t
            << " is above the trusted threshold " << kValidityThreshold
            << "; treat results as qualitative";
        warn(warnings, msg.str());
    }
}

/// D(t) = hbar^2 sinh^2 + (I Omega)^2 sigma^4 cosh^2, the variance-like
/// denominator of the evolved density. Templated so the peak search can
/// run in extended precision.
template <typename Real>
Real density_denominator(Real hbar, Real rate, Real action_scale, Real sigma, Real t) {
    const Real s = std::sinh(rate * t);
    const Real c = std::cosh(rate * t);
    const Real hs = hbar * s;
    const Real ac = action_scale * sigma * sigma * c;
    return hs * hs + ac * ac;
}

template <typename Real>
Real log_density_impl(Real hbar, Real rate, Real action_scale, Real sigma, Real theta, Real t) {
    const Real a_sigma = action_scale * sigma;
    const Real d = density_denominator(hbar, rate, action_scale, sigma, t);
    return std::log(a_sigma) - Real{0.5} * std::log(Real{kPi} * d) -
           a_sigma * a_sigma * theta * theta / d;
}

/// Golden-section maximizer; shrinks [lo, hi] to a relative width of
/// rel_tol. Extended precision keeps the flat-top comparison noise below
/// the requested tolerance (double alone bottoms out near sqrt(eps)).
template <typename F>
long double golden_section_max(F f, long double lo, long double hi, long double rel_tol) {
    constexpr long double inv_phi = 0.61803398874989484820L;
    long double x1 = hi - inv_phi * (hi - lo);
    long double x2 = lo + inv_phi * (hi - lo);
    long double f1 = f(x1);
    long double f2 = f(x2);
    while (hi - lo > rel_tol * hi) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5L * (lo + hi);
}

} // namespace

PropagatorValidity propagator_validity(const RodParameters& params, double t) {
    if (!(std::isfinite(t) && t >= 0.0)) {
        std::ostringstream msg;
        msg << "propagator_validity: t must be non-negative, got " << t;
        throw DomainError(msg.str());
    }
    const Scales s = scales_of(params);
    const double ratio = 2.0 * s.hbar * std::sinh(s.rate * t) / s.action_scale;
    return PropagatorValidity{t, ratio, ratio < kValidityThreshold};
}

double alpha_factor(const RodParameters& params, double t) {
    require_positive_time(t, "alpha_factor");
    const Scales s = scales_of(params);
    return s.action_scale / (2.0 * s.hbar * std::sinh(s.rate * t));
}

double classical_trajectory(const RodParameters& params, double theta1, double theta2,
                            double t, double tau) {
    require_positive_time(t, "classical_trajectory");
    if (!(tau >= 0.0 && tau <= t)) {
        std::ostringstream msg;
        msg << "classical_trajectory: tau = " << tau << " outside [0, t = " << t << "]";
        throw DomainError(msg.str());
    }
    const double rate = scales_of(params).rate;
    const double coeff = (theta2 - theta1 * std::cosh(rate * t)) / std::sinh(rate * t);
    return coeff * std::sinh(rate * tau) + theta1 * std::cosh(rate * tau);
}

double classical_action(const RodParameters& params, double theta1, double theta2, double t) {
    require_positive_time(t, "classical_action");
    const Scales s = scales_of(params);
    const double st = std::sinh(s.rate * t);
    const double ct = std::cosh(s.rate * t);
    return s.action_scale / (2.0 * st) *
           ((theta1 * theta1 + theta2 * theta2) * ct - 2.0 * theta1 * theta2);
}

std::complex<double> propagator(const RodParameters& params, double theta1, double theta2,
                                double t, WarningLog* warnings) {
    const Scales s = scales_of(params);
    gate_validity(s, t, "propagator", warnings);
    const double st = std::sinh(s.rate * t);
    // principal branch of sqrt(I Omega / (2 pi i hbar sinh)): the argument
    // lies on the negative imaginary axis, so the root carries exp(-i pi/4)
    const std::complex<double> prefactor =
        std::sqrt(std::complex<double>(0.0, -s.action_scale / (2.0 * kPi * s.hbar * st)));
    const double action = classical_action(params, theta1, theta2, t);
    return prefactor * std::exp(std::complex<double>(0.0, action / s.hbar));
}

std::complex<double> unitarity_kernel(const RodParameters& params, double theta, double t) {
    require_positive_time(t, "unitarity_kernel");
    const Scales s = scales_of(params);
    const double st = std::sinh(s.rate * t);
    const double ct = std::cosh(s.rate * t);
    const double alpha = s.action_scale / (2.0 * s.hbar * st);
    const double mod_g0_sq = s.action_scale / (2.0 * kPi * s.hbar * st);

    // sin(alpha pi theta / 2) / (alpha theta), with the sinc limit at theta = 0
    const double x = alpha * kPi * theta / 2.0;
    double sinc_part;
    if (std::abs(x) < 1e-8) {
        sinc_part = (kPi / 2.0) * (1.0 - x * x / 6.0);
    } else {
        sinc_part = std::sin(x) / (alpha * theta);
    }

    const std::complex<double> phase =
        std::exp(std::complex<double>(0.0, -alpha * theta * theta * ct));
    return mod_g0_sq * phase * sinc_part;
}

std::complex<double> analytic_wavefunction(const RodParameters& params, const GaussianState& state,
                                           double theta, double t, WarningLog* warnings) {
    const Scales s = scales_of(params);
    const double sigma = state.sigma;
    if (t == 0.0) {
        // limit of the closed form: the erf(pi/2sigma) ~ 1 Gaussian
        return std::exp(-theta * theta / (2.0 * sigma * sigma)) /
               std::sqrt(std::sqrt(kPi) * sigma);
    }
    gate_validity(s, t, "analytic_wavefunction", warnings);

    const double st = std::sinh(s.rate * t);
    const double ct = std::cosh(s.rate * t);
    const double alpha = s.action_scale / (2.0 * s.hbar * st);

    const std::complex<double> g0 =
        std::sqrt(std::complex<double>(0.0, -s.action_scale / (2.0 * kPi * s.hbar * st)));
    // Gaussian-integral coefficient p = 1/(2 sigma^2) - i alpha cosh
    const std::complex<double> p(1.0 / (2.0 * sigma * sigma), -alpha * ct);
    const std::complex<double> chirp =
        std::exp(std::complex<double>(0.0, alpha * theta * theta * ct));
    const std::complex<double> envelope =
        std::exp(-(alpha * theta) * (alpha * theta) / p);

    return g0 / std::sqrt(std::sqrt(kPi) * sigma) * std::sqrt(kPi) / std::sqrt(p) * chirp *
           envelope;
}

WaveFunction evolve_analytic(const RodParameters& params, const GaussianState& state, double t,
                             const AngularGrid& grid, WarningLog* warnings) {
    WaveFunction psi;
    psi.grid = grid;
    psi.time = t;
    psi.amplitudes.resize(static_cast<std::size_t>(grid.n_points));
    // gate once; per-sample calls then share the already-emitted warning
    if (t != 0.0) gate_validity(scales_of(params), t, "evolve_analytic", warnings);
    for (int j = 0; j < grid.n_points; ++j) {
        psi.amplitudes[static_cast<std::size_t>(j)] =
            analytic_wavefunction(params, state, grid.node(j), t, nullptr);
    }
    return psi;
}

double density_analytic(const RodParameters& params, const GaussianState& state,
                        double theta, double t) {
    if (!(std::isfinite(t) && t >= 0.0)) {
        std::ostringstream msg;
        msg << "density_analytic: t must be non-negative, got " << t;
        throw DomainError(msg.str());
    }
    const Scales s = scales_of(params);
    const double a_sigma = s.action_scale * state.sigma;
    const double d = density_denominator(s.hbar, s.rate, s.action_scale, state.sigma, t);
    return a_sigma / (std::sqrt(kPi) * std::sqrt(d)) *
           std::exp(-a_sigma * a_sigma * theta * theta / d);
}

double log_density_analytic(const RodParameters& params, const GaussianState& state,
                            double theta, double t) {
    const Scales s = scales_of(params);
    return log_density_impl(s.hbar, s.rate, s.action_scale, state.sigma, theta, t);
}

double density_peak_time(const RodParameters& params, const GaussianState& state, double theta) {
    const Scales s = scales_of(params);
    const double sigma = state.sigma;
    if (theta == 0.0) {
        throw DomainError("density_peak_time: P(0, t) is monotone decreasing; no interior maximum");
    }
    // P(theta, .) rises before decaying only when the packet is still
    // narrower than the target angle allows: 2 theta^2 > sigma^2.
    if (2.0 * theta * theta <= sigma * sigma) {
        std::ostringstream msg;
        msg << "density_peak_time: no interior maximum for |theta| <= sigma/sqrt(2) "
            << "(theta = " << theta << ", sigma = " << sigma << ")";
        throw DomainError(msg.str());
    }

    // coarse log-spaced scan over the validity window [1e-6/Omega, ratio = 1]
    constexpr int kScanPoints = 256;
    const double t_lo = 1e-6 / s.rate;
    const double t_hi = std::asinh(s.action_scale / (2.0 * s.hbar)) / s.rate;
    const double log_lo = std::log(t_lo);
    const double log_step = (std::log(t_hi) - log_lo) / (kScanPoints - 1);

    int best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kScanPoints; ++i) {
        const double t = std::exp(log_lo + i * log_step);
        const double value = log_density_impl(s.hbar, s.rate, s.action_scale, sigma, theta, t);
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    if (best == 0 || best == kScanPoints - 1) {
        std::ostringstream msg;
        msg << "density_peak_time: no interior maximum inside the validity window for theta = "
            << theta;
        throw DomainError(msg.str());
    }

    const long double hbar = s.hbar;
    const long double rate = s.rate;
    const long double scale = s.action_scale;
    const long double sig = sigma;
    const long double th = theta;
    const auto objective = [&](long double t) {
        return log_density_impl<long double>(hbar, rate, scale, sig, th, t);
    };
    const long double lo = std::exp(static_cast<long double>(log_lo + (best - 1) * log_step));
    const long double hi = std::exp(static_cast<long double>(log_lo + (best + 1) * log_step));
    return static_cast<double>(golden_section_max(objective, lo, hi, 1e-10L));
}

namespace {

void require_sigma_range(double sigma, const char* op) {
    if (!(std::isfinite(sigma) && sigma > 0.0 && sigma < kPi / 2.0)) {
        std::ostringstream msg;
        msg << op << ": sigma must lie in (0, pi/2), got " << sigma;
        throw DomainError(msg.str());
    }
}

} // namespace

double tipping_time_exact(const RodParameters& params, double sigma) {
    require_sigma_range(sigma, "tipping_time_exact");
    const Scales s = scales_of(params);
    const double a_sigma2 = s.action_scale * sigma * sigma;
    return std::asinh(a_sigma2 / std::hypot(params.hbar, a_sigma2)) / s.rate;
}

double tipping_time_exact_rod_form(const RodParameters& params, double sigma) {
    require_sigma_range(sigma, "tipping_time_exact_rod_form");
    const DerivedParameters d = derive(params);
    const double sqrt_kappa = std::sqrt(d.kappa);
    const double ma2omega = params.mass * params.half_length * params.half_length * d.omega;
    const double arg_num = sqrt_kappa * ma2omega * sigma * sigma;
    return sqrt_kappa / d.omega * std::asinh(arg_num / std::hypot(params.hbar, arg_num));
}

double tipping_time_quantum_approx(const RodParameters& params, double sigma,
                                   WarningLog* warnings) {
    require_sigma_range(sigma, "tipping_time_quantum_approx");
    const DerivedParameters d = derive(params);
    if (classical_regime(d) != Regime::Quantum) {
        std::ostringstream msg;
        msg << "tipping_time_quantum_approx: de Broglie ratio " << d.de_broglie_ratio
            << " is not in the quantum domain (> 1); the dropped sigma^4 term may matter";
        warn(warnings, msg.str());
    }
    const double sqrt_kappa = std::sqrt(d.kappa);
    const double ma2omega = params.mass * params.half_length * params.half_length * d.omega;
    return sqrt_kappa / d.omega * std::asinh(sqrt_kappa * ma2omega * sigma * sigma / params.hbar);
}

double tipping_time_linearized(const RodParameters& params, double sigma) {
    require_sigma_range(sigma, "tipping_time_linearized");
    return derive(params).moment_of_inertia * sigma * sigma / params.hbar;
}

UncertaintyProduct uncertainty_product(const RodParameters& params, double sigma,
                                       WarningLog* warnings) {
    const DerivedParameters d = derive(params);
    const double t_exact = tipping_time_exact(params, sigma);
    const double t_linear = tipping_time_linearized(params, sigma);
    const double inertia_sigma2 = d.moment_of_inertia * sigma * sigma;

    UncertaintyProduct result;
    result.product_exact = inertia_sigma2 / t_exact;
    result.product_linearized = inertia_sigma2 / t_linear;  // identically hbar
    result.ratio_to_hbar = result.product_exact / params.hbar;
    const double a_sigma2 = d.action_scale() * sigma * sigma;
    result.asinh_argument = a_sigma2 / std::hypot(params.hbar, a_sigma2);
    result.linearized_regime = result.asinh_argument < kLinearizedThreshold;
    if (!result.linearized_regime) {
        std::ostringstream msg;
        msg << "uncertainty_product: asinh argument " << result.asinh_argument
            << " exceeds " << kLinearizedThreshold
            << "; the Delta-theta * Delta-l ~ hbar reading assumes the linearized regime";
        warn(warnings, msg.str());
    }
    return result;
}

TippingReport tipping_report(const RodParameters& params, double sigma, WarningLog* warnings) {
    TippingReport report;
    report.sigma = sigma;
    report.t_tip_exact = tipping_time_exact(params, sigma);
    report.t_tip_quantum_approx = tipping_time_quantum_approx(params, sigma, warnings);
    report.t_tip_linearized = tipping_time_linearized(params, sigma);
    report.validity = propagator_validity(params, report.t_tip_exact);
    report.regime = classical_regime(params);
    return report;
}

} // namespace qrod
