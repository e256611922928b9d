#pragma once

#include <span>
#include <string>
#include <vector>

#include "qrod/parameters.hpp"
#include "qrod/schrodinger.hpp"
#include "qrod/semiclassical.hpp"

namespace qrod {

enum class SweepVariable { Sigma, Omega, Hbar };

const char* to_string(SweepVariable variable);

/// One-dimensional parameter sweep. The swept variable replaces the
/// corresponding entry of the base configuration point by point; for
/// Omega the gravity is adjusted (omega = sqrt(g/a), a fixed).
struct SweepSpec {
    SweepVariable variable = SweepVariable::Sigma;
    std::vector<double> values;  ///< strictly monotone
    RodParameters base;
    double sigma = 0.1;

    bool with_numeric = false;  ///< also run the grid oracle per point (slow)
    int grid_points = 1024;
    PotentialKind potential = PotentialKind::FullCosine;
};

struct SweepRecord {
    double value = 0.0;
    double t_tip_exact = 0.0;
    double t_tip_quantum_approx = 0.0;
    double t_tip_linearized = 0.0;
    double validity_ratio = 0.0;     ///< at t_tip_exact
    double uncertainty_ratio = 0.0;  ///< (I sigma^2 / t_tip_exact) / hbar
    double t_tip_numeric = 0.0;      ///< NaN unless requested
    Regime regime = Regime::Intermediate;
    std::string error;  ///< non-empty when this point failed; other fields NaN
};

/// Evaluates every sweep point. Point failures are recorded in-row and do
/// not abort the sweep. Points are independent; jobs > 1 evaluates them in
/// parallel with order-preserving, run-to-run-identical assembly.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int jobs = 1);

/// Least-squares fit of log y = exponent * log x + intercept.
struct ScalingFit {
    double exponent = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double window_min = 0.0;  ///< x-range actually used
    double window_max = 0.0;
};

/// Fits a power law through (x, y) pairs; both must be positive.
ScalingFit fit_power_law(std::span<const double> x, std::span<const double> y);

/// One density-vs-time curve P(theta, .) with its shape diagnostics.
struct DensityCurve {
    double theta = 0.0;
    std::vector<double> density;     ///< sampled on DensitySurface::times
    bool monotone_decreasing = false;
    bool unimodal = false;           ///< exactly one sign change of the discrete derivative
    double peak_time = 0.0;          ///< NaN when monotone
};

/// P(theta_i, t_j) over a theta x t lattice, with per-curve peak
/// annotations.
struct DensitySurface {
    std::vector<double> times;
    std::vector<DensityCurve> curves;
};

DensitySurface figure_curves(const RodParameters& params, const GaussianState& state,
                             std::span<const double> thetas, std::span<const double> times);

struct GridOptions {
    int n_points = 1024;
    double dt = 0.0;  ///< <= 0 picks default_time_step
};

/// Analytic tipping time and density vs the grid oracle under both
/// potentials, with pass/fail against the configured tolerances.
struct CrossValidationReport {
    double sigma = 0.0;
    double hbar = 0.0;
    double t_tip_exact = 0.0;
    double validity_ratio_at_tip = 0.0;

    double t_tip_numeric_cosine = 0.0;
    double t_tip_numeric_quadratic = 0.0;
    double tip_rel_err_cosine = 0.0;
    double tip_rel_err_quadratic = 0.0;

    /// sup-norm density mismatch normalized by the analytic peak,
    /// max_j |P_num - P_ana| / max_j P_ana, at t_tip/2 and t_tip.
    double density_err_half_cosine = 0.0;
    double density_err_tip_cosine = 0.0;
    double density_err_half_quadratic = 0.0;
    double density_err_tip_quadratic = 0.0;

    double tolerance_cosine = 0.0;
    double tolerance_quadratic = 0.0;
    bool pass = false;
    std::vector<std::string> failures;  ///< one line per violated bound
};

CrossValidationReport cross_validate(const RodParameters& params, double sigma,
                                     const GridOptions& grid_options = {},
                                     double tolerance_cosine = 0.05,
                                     double tolerance_quadratic = 0.01);

/// log10 P(theta0, t0) along the classical-limit sequence hbar_k = 2^-k,
/// sigma_k = sigma0 2^(-k/2), k = 0..k_max. Returned in log space because
/// the densities themselves underflow long before the sequence ends.
std::vector<double> classical_limit_log10_density(const RodParameters& base, double sigma0,
                                                  double theta0, double t0, int k_max);

} // namespace qrod
