#include "qrod/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qrod/semiclassical.hpp"
#include "qrod/tridiagonal.hpp"

namespace qrod {

const char* to_string(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::FullCosine: return "cosine";
        case PotentialKind::Quadratic: return "quadratic";
    }
    return "unknown";
}

double PotentialSpec::value(double theta) const {
    switch (kind) {
        case PotentialKind::FullCosine: return mga * std::cos(theta);
        case PotentialKind::Quadratic: return mga * (1.0 - 0.5 * theta * theta);
    }
    return 0.0;
}

PotentialSpec PotentialSpec::full_cosine(const RodParameters& params) {
    return PotentialSpec{PotentialKind::FullCosine,
                         params.mass * params.gravity * params.half_length};
}

PotentialSpec PotentialSpec::quadratic(const RodParameters& params) {
    return PotentialSpec{PotentialKind::Quadratic,
                         params.mass * params.gravity * params.half_length};
}

WaveFunction discretize_initial(const GaussianState& state, const AngularGrid& grid) {
    // demand a minimally resolved packet: 16 nodes across [-3 sigma, 3 sigma]
    const double nodes_in_core = 6.0 * state.sigma / grid.spacing;
    if (nodes_in_core < 16.0) {
        std::ostringstream msg;
        msg << "discretize_initial: only ~" << nodes_in_core << " nodes across [-3, 3] sigma"
            << " (sigma = " << state.sigma << ", spacing = " << grid.spacing
            << "); refine the grid";
        throw DomainError(msg.str());
    }

    WaveFunction psi;
    psi.grid = grid;
    psi.time = 0.0;
    psi.amplitudes.resize(static_cast<std::size_t>(grid.n_points));
    for (int j = 0; j < grid.n_points; ++j) {
        psi.amplitudes[static_cast<std::size_t>(j)] = state.amplitude(grid.node(j));
    }
    // renormalize so the discrete norm is exactly 1
    const double norm = psi.norm();
    for (auto& amp : psi.amplitudes) amp /= norm;
    return psi;
}

double default_time_step(const RodParameters& params, const AngularGrid& grid) {
    const DerivedParameters d = derive(params);
    const double rate_limit = 0.01 / d.growth_rate;
    const double grid_limit =
        d.moment_of_inertia * grid.spacing * grid.spacing / params.hbar;
    return std::min(rate_limit, grid_limit);
}

CayleyStepper::CayleyStepper(const RodParameters& params, const AngularGrid& grid,
                             const PotentialSpec& potential, double dt)
    : dt_(dt) {
    if (!(std::isfinite(dt) && dt > 0.0)) {
        std::ostringstream msg;
        msg << "CayleyStepper: dt must be positive, got " << dt;
        throw DomainError(msg.str());
    }
    const DerivedParameters d = derive(params);
    const std::size_t n = static_cast<std::size_t>(grid.n_points);

    const double kinetic =
        params.hbar * params.hbar / (2.0 * d.moment_of_inertia * grid.spacing * grid.spacing);
    const double lambda = dt / (2.0 * params.hbar);

    // H = tridiag(-K, 2K + V_j, -K); forward = 1 - i lambda H, backward = 1 + i lambda H
    off_forward_ = std::complex<double>(0.0, lambda * kinetic);
    off_backward_ = std::complex<double>(0.0, -lambda * kinetic);

    diag_forward_.resize(n);
    diag_backward_.resize(n);
    off_backward_vec_.assign(n - 1, off_backward_);
    rhs_.resize(n);
    workspace_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double h_jj = 2.0 * kinetic + potential.value(grid.node(static_cast<int>(j)));
        diag_forward_[j] = std::complex<double>(1.0, -lambda * h_jj);
        diag_backward_[j] = std::complex<double>(1.0, lambda * h_jj);
    }
}

void CayleyStepper::advance(WaveFunction& psi) const {
    const std::size_t n = diag_forward_.size();
    const auto& amp = psi.amplitudes;

    rhs_[0] = diag_forward_[0] * amp[0] + off_forward_ * amp[1];
    for (std::size_t j = 1; j + 1 < n; ++j) {
        rhs_[j] = diag_forward_[j] * amp[j] + off_forward_ * (amp[j - 1] + amp[j + 1]);
    }
    rhs_[n - 1] = diag_forward_[n - 1] * amp[n - 1] + off_forward_ * amp[n - 2];

    solve_tridiagonal(off_backward_vec_, diag_backward_, off_backward_vec_, rhs_, workspace_);
    psi.amplitudes.swap(rhs_);
    psi.time += dt_;
}

WaveFunction step(const RodParameters& params, const WaveFunction& psi, double dt,
                  const PotentialSpec& potential) {
    CayleyStepper stepper(params, psi.grid, potential, dt);
    WaveFunction next = psi;
    stepper.advance(next);
    return next;
}

namespace {

void require_time_step(const RodParameters& params, const AngularGrid& grid, double dt) {
    const double bound = default_time_step(params, grid);
    if (!(std::isfinite(dt) && dt > 0.0) || dt > bound * (1.0 + 1e-9)) {
        std::ostringstream msg;
        msg << "time step dt = " << dt << " violates the resolution bound "
            << "min(0.01/Omega, I dtheta^2/hbar) = " << bound;
        throw DomainError(msg.str());
    }
}

} // namespace

WaveFunction evolve_numeric(const RodParameters& params, const GaussianState& state, double t,
                            const AngularGrid& grid, const PotentialSpec& potential, double dt) {
    if (!(std::isfinite(t) && t >= 0.0)) {
        std::ostringstream msg;
        msg << "evolve_numeric: t must be non-negative, got " << t;
        throw DomainError(msg.str());
    }
    require_time_step(params, grid, dt);

    WaveFunction psi = discretize_initial(state, grid);
    if (t == 0.0) return psi;

    const auto full_steps = static_cast<long long>(std::floor(t / dt));
    CayleyStepper stepper(params, grid, potential, dt);
    for (long long i = 0; i < full_steps; ++i) stepper.advance(psi);

    const double remainder = t - static_cast<double>(full_steps) * dt;
    if (remainder > 1e-15 * t) {
        CayleyStepper final_stepper(params, grid, potential, remainder);
        final_stepper.advance(psi);
    }
    psi.time = t;  // land exactly, regardless of accumulated rounding
    return psi;
}

double tipping_time_numeric(const RodParameters& params, const GaussianState& state,
                            const AngularGrid& grid, const PotentialSpec& potential, double dt,
                            double t_max, PeakTrace* trace) {
    require_time_step(params, grid, dt);
    const DerivedParameters d = derive(params);
    if (t_max <= 0.0) {
        // stop where even the marginal-validity band is left far behind
        const double sinh_bound = 0.8 * d.action_scale() / (2.0 * params.hbar);
        t_max = std::asinh(sinh_bound) / d.growth_rate;
    }

    WaveFunction psi = discretize_initial(state, grid);
    CayleyStepper stepper(params, grid, potential, dt);

    const double probe_theta = state.sigma;
    double best_value = psi.density_interpolated(probe_theta);
    long long best_index = 0;
    std::vector<double> values{best_value};

    if (trace != nullptr) {
        trace->times.assign(1, 0.0);
        trace->values.assign(1, best_value);
    }

    const auto max_steps = static_cast<long long>(std::ceil(t_max / dt));
    long long index = 0;
    for (; index < max_steps; ++index) {
        stepper.advance(psi);
        const double value = psi.density_interpolated(probe_theta);
        values.push_back(value);
        if (trace != nullptr) {
            trace->times.push_back(static_cast<double>(index + 1) * dt);
            trace->values.push_back(value);
        }
        if (value > best_value) {
            best_value = value;
            best_index = index + 1;
        }
        // the first peak is decisively passed; stop before wall revivals
        if (best_index > 0 && value < 0.5 * best_value) break;
    }

    if (best_index == 0 || best_index >= static_cast<long long>(values.size()) - 1) {
        std::ostringstream msg;
        msg << "tipping_time_numeric: no interior maximum of P(sigma, t) found in [0, "
            << t_max << "]; the semiclassical tipping picture does not apply here";
        throw std::runtime_error(msg.str());
    }

    // parabolic refinement through the three samples around the maximum
    const double y0 = values[static_cast<std::size_t>(best_index) - 1];
    const double y1 = values[static_cast<std::size_t>(best_index)];
    const double y2 = values[static_cast<std::size_t>(best_index) + 1];
    const double curvature = y0 - 2.0 * y1 + y2;
    const double offset = curvature != 0.0 ? 0.5 * (y0 - y2) / curvature : 0.0;
    return (static_cast<double>(best_index) + offset) * dt;
}

double energy_expectation(const RodParameters& params, const WaveFunction& psi,
                          const PotentialSpec& potential) {
    const DerivedParameters d = derive(params);
    const std::size_t n = psi.amplitudes.size();
    const double kinetic = params.hbar * params.hbar /
                           (2.0 * d.moment_of_inertia * psi.grid.spacing * psi.grid.spacing);
    std::complex<double> sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double v = potential.value(psi.grid.node(static_cast<int>(j)));
        std::complex<double> h_psi = (2.0 * kinetic + v) * psi.amplitudes[j];
        if (j > 0) h_psi -= kinetic * psi.amplitudes[j - 1];
        if (j + 1 < n) h_psi -= kinetic * psi.amplitudes[j + 1];
        sum += std::conj(psi.amplitudes[j]) * h_psi;
    }
    return sum.real() * psi.grid.spacing;
}

} // namespace qrod
