#include "qrod/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

namespace qrod {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

RodParameters apply_sweep_value(const SweepSpec& spec, double value, double& sigma) {
    RodParameters p = spec.base;
    sigma = spec.sigma;
    switch (spec.variable) {
        case SweepVariable::Sigma:
            sigma = value;
            break;
        case SweepVariable::Omega:
            // omega = sqrt(g/a): realize the requested omega through gravity
            p.gravity = value * value * p.half_length;
            break;
        case SweepVariable::Hbar:
            p.hbar = value;
            break;
    }
    return p;
}

SweepRecord evaluate_point(const SweepSpec& spec, double value) {
    SweepRecord record;
    record.value = value;
    record.t_tip_numeric = kNaN;
    try {
        double sigma = 0.0;
        const RodParameters p = apply_sweep_value(spec, value, sigma);
        record.t_tip_exact = tipping_time_exact(p, sigma);
        record.t_tip_quantum_approx = tipping_time_quantum_approx(p, sigma);
        record.t_tip_linearized = tipping_time_linearized(p, sigma);
        record.validity_ratio = propagator_validity(p, record.t_tip_exact).ratio;
        record.uncertainty_ratio = uncertainty_product(p, sigma).ratio_to_hbar;
        record.regime = classical_regime(p);
        if (spec.with_numeric) {
            const GaussianState state = make_gaussian(sigma);
            const AngularGrid grid = AngularGrid::uniform(spec.grid_points);
            const PotentialSpec pot = spec.potential == PotentialKind::FullCosine
                                          ? PotentialSpec::full_cosine(p)
                                          : PotentialSpec::quadratic(p);
            record.t_tip_numeric =
                tipping_time_numeric(p, state, grid, pot, default_time_step(p, grid));
        }
    } catch (const std::exception& e) {
        record.error = e.what();
        record.t_tip_exact = kNaN;
        record.t_tip_quantum_approx = kNaN;
        record.t_tip_linearized = kNaN;
        record.validity_ratio = kNaN;
        record.uncertainty_ratio = kNaN;
        record.t_tip_numeric = kNaN;
    }
    return record;
}

} // namespace

const char* to_string(SweepVariable variable) {
    switch (variable) {
        case SweepVariable::Sigma: return "sigma";
        case SweepVariable::Omega: return "omega";
        case SweepVariable::Hbar: return "hbar";
    }
    return "unknown";
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int jobs) {
    if (spec.values.empty()) throw DomainError("run_sweep: empty value list");
    const bool increasing = spec.values.size() < 2 || spec.values[1] > spec.values[0];
    for (std::size_t i = 1; i < spec.values.size(); ++i) {
        const bool step_up = spec.values[i] > spec.values[i - 1];
        if (step_up != increasing || spec.values[i] == spec.values[i - 1]) {
            throw DomainError("run_sweep: values must be strictly monotone");
        }
    }

    std::vector<SweepRecord> records(spec.values.size());
    const int worker_count =
        std::max(1, std::min<int>(jobs, static_cast<int>(spec.values.size())));
    if (worker_count == 1) {
        for (std::size_t i = 0; i < spec.values.size(); ++i) {
            records[i] = evaluate_point(spec, spec.values[i]);
        }
        return records;
    }

    // each point is pure and lands in its own slot: results are identical
    // to the sequential order no matter how work is split
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(worker_count));
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < worker_count; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= spec.values.size()) return;
                records[i] = evaluate_point(spec, spec.values[i]);
            }
        });
    }
    for (auto& worker : workers) worker.join();
    return records;
}

ScalingFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DomainError("fit_power_law: need at least two matching samples");
    }
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0 && y[i] > 0.0)) {
            throw DomainError("fit_power_law: samples must be positive for a log-log fit");
        }
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        syy += ly * ly;
    }
    const double denom = n * sxx - sx * sx;
    ScalingFit fit;
    fit.exponent = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.exponent * sx) / n;
    const double ss_tot = syy - sy * sy / n;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = std::log(y[i]) - (fit.exponent * std::log(x[i]) + fit.intercept);
        ss_res += r * r;
    }
    fit.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    fit.window_min = *std::min_element(x.begin(), x.end());
    fit.window_max = *std::max_element(x.begin(), x.end());
    return fit;
}

DensitySurface figure_curves(const RodParameters& params, const GaussianState& state,
                             std::span<const double> thetas, std::span<const double> times) {
    if (thetas.empty()) throw DomainError("figure_curves: empty theta list");
    if (times.size() < 3) throw DomainError("figure_curves: need at least three time samples");

    DensitySurface surface;
    surface.times.assign(times.begin(), times.end());
    surface.curves.reserve(thetas.size());
    for (const double theta : thetas) {
        DensityCurve curve;
        curve.theta = theta;
        curve.density.reserve(times.size());
        for (const double t : times) {
            curve.density.push_back(density_analytic(params, state, theta, t));
        }

        int sign_changes = 0;
        int rises = 0;
        int previous_sign = 0;
        for (std::size_t i = 1; i < curve.density.size(); ++i) {
            const double diff = curve.density[i] - curve.density[i - 1];
            const int sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
            if (sign > 0) ++rises;
            if (sign != 0 && previous_sign != 0 && sign != previous_sign) ++sign_changes;
            if (sign != 0) previous_sign = sign;
        }
        curve.monotone_decreasing = rises == 0;
        curve.unimodal = sign_changes == 1 && !curve.monotone_decreasing;
        curve.peak_time = kNaN;
        if (curve.unimodal) {
            const auto peak = std::max_element(curve.density.begin(), curve.density.end());
            const auto peak_index =
                static_cast<std::size_t>(std::distance(curve.density.begin(), peak));
            curve.peak_time = surface.times[peak_index];
        }
        surface.curves.push_back(std::move(curve));
    }
    return surface;
}

namespace {

/// sup-norm mismatch normalized by the analytic peak. Pointwise relative
/// error is meaningless in the far Gaussian tails, so profiles are
/// compared against the profile maximum instead.
double density_profile_error(const RodParameters& params, const GaussianState& state,
                             const WaveFunction& numeric, double t) {
    double max_diff = 0.0;
    double max_ref = 0.0;
    for (int j = 0; j < numeric.grid.n_points; ++j) {
        const double reference = density_analytic(params, state, numeric.grid.node(j), t);
        max_ref = std::max(max_ref, reference);
        max_diff = std::max(max_diff, std::abs(numeric.density(j) - reference));
    }
    return max_diff / max_ref;
}

} // namespace

CrossValidationReport cross_validate(const RodParameters& params, double sigma,
                                     const GridOptions& grid_options, double tolerance_cosine,
                                     double tolerance_quadratic) {
    const Regime regime = classical_regime(params);
    if (regime == Regime::Classical) {
        throw DomainError(
            "cross_validate: grid oracle comparisons need the quantum or intermediate regime");
    }

    CrossValidationReport report;
    report.sigma = sigma;
    report.hbar = params.hbar;
    report.tolerance_cosine = tolerance_cosine;
    report.tolerance_quadratic = tolerance_quadratic;
    report.t_tip_exact = tipping_time_exact(params, sigma);
    report.validity_ratio_at_tip = propagator_validity(params, report.t_tip_exact).ratio;

    const GaussianState state = make_gaussian(sigma);
    const AngularGrid grid = AngularGrid::uniform(grid_options.n_points);
    const double dt = grid_options.dt > 0.0 ? grid_options.dt : default_time_step(params, grid);

    const PotentialSpec cosine = PotentialSpec::full_cosine(params);
    const PotentialSpec quadratic = PotentialSpec::quadratic(params);

    report.t_tip_numeric_cosine = tipping_time_numeric(params, state, grid, cosine, dt);
    report.t_tip_numeric_quadratic = tipping_time_numeric(params, state, grid, quadratic, dt);
    report.tip_rel_err_cosine =
        std::abs(report.t_tip_numeric_cosine - report.t_tip_exact) / report.t_tip_exact;
    report.tip_rel_err_quadratic =
        std::abs(report.t_tip_numeric_quadratic - report.t_tip_exact) / report.t_tip_exact;

    const double t_half = 0.5 * report.t_tip_exact;
    report.density_err_half_cosine = density_profile_error(
        params, state, evolve_numeric(params, state, t_half, grid, cosine, dt), t_half);
    report.density_err_tip_cosine = density_profile_error(
        params, state, evolve_numeric(params, state, report.t_tip_exact, grid, cosine, dt),
        report.t_tip_exact);
    report.density_err_half_quadratic = density_profile_error(
        params, state, evolve_numeric(params, state, t_half, grid, quadratic, dt), t_half);
    report.density_err_tip_quadratic = density_profile_error(
        params, state, evolve_numeric(params, state, report.t_tip_exact, grid, quadratic, dt),
        report.t_tip_exact);

    auto check = [&](const char* name, double value, double tolerance) {
        if (!(value <= tolerance)) {
            std::ostringstream msg;
            msg << name << " = " << value << " exceeds tolerance " << tolerance;
            report.failures.push_back(msg.str());
        }
    };
    check("tip_rel_err_cosine", report.tip_rel_err_cosine, tolerance_cosine);
    check("tip_rel_err_quadratic", report.tip_rel_err_quadratic, tolerance_quadratic);
    check("density_err_half_cosine", report.density_err_half_cosine, tolerance_cosine);
    check("density_err_tip_cosine", report.density_err_tip_cosine, tolerance_cosine);
    check("density_err_half_quadratic", report.density_err_half_quadratic, tolerance_quadratic);
    check("density_err_tip_quadratic", report.density_err_tip_quadratic, tolerance_quadratic);
    report.pass = report.failures.empty();
    return report;
}

std::vector<double> classical_limit_log10_density(const RodParameters& base, double sigma0,
                                                  double theta0, double t0, int k_max) {
    if (k_max < 0) throw DomainError("classical_limit_log10_density: k_max must be >= 0");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        RodParameters p = base;
        p.hbar = std::ldexp(1.0, -k);  // 2^-k exactly
        const double sigma_k = sigma0 * std::exp2(-0.5 * k);
        const GaussianState state = make_gaussian(sigma_k);
        out.push_back(log_density_analytic(p, state, theta0, t0) / std::numbers::ln10);
    }
    return out;
}

} // namespace qrod
