#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qrod/grid.hpp"
#include "qrod/parameters.hpp"

namespace qrod {

enum class PotentialKind { FullCosine, Quadratic };

const char* to_string(PotentialKind kind);

/// Potential on [-pi/2, pi/2]; the walls themselves are realized as
/// Dirichlet boundary conditions, not as finite values here.
struct PotentialSpec {
    PotentialKind kind;
    double mga;  ///< m g a [J]

    double value(double theta) const;

    static PotentialSpec full_cosine(const RodParameters& params);  ///< V = m g a cos(theta)
    static PotentialSpec quadratic(const RodParameters& params);    ///< V = m g a (1 - theta^2/2)
};

/// Samples the initial Gaussian on the grid and renormalizes so the
/// discrete norm is exactly 1. Throws DomainError when fewer than 16 nodes
/// fall inside [-3 sigma, 3 sigma] (the packet would be under-resolved).
WaveFunction discretize_initial(const GaussianState& state, const AngularGrid& grid);

/// Largest time step the default settings allow:
/// min(0.01/Omega, I dtheta^2 / hbar). Resolves both the instability rate
/// and the grid's kinetic scale.
double default_time_step(const RodParameters& params, const AngularGrid& grid);

/// One Cayley (implicit midpoint) step of H = -(hbar^2/2I) d^2/dtheta^2 + V:
///
///   psi' = (1 + i dt H / 2 hbar)^-1 (1 - i dt H / 2 hbar) psi
///
/// Second-order central differences, Dirichlet walls, tridiagonal solve.
/// Unitary in exact arithmetic, so the discrete norm is conserved to
/// roundoff per step. Factors are precomputed per (params, grid,
/// potential, dt); reuse one stepper across many steps.
class CayleyStepper {
public:
    CayleyStepper(const RodParameters& params, const AngularGrid& grid,
                  const PotentialSpec& potential, double dt);

    void advance(WaveFunction& psi) const;

    double dt() const { return dt_; }

private:
    double dt_;
    std::complex<double> off_forward_;   // off-diagonal of (1 - i dt H / 2 hbar)
    std::complex<double> off_backward_;  // off-diagonal of (1 + i dt H / 2 hbar)
    std::vector<std::complex<double>> diag_forward_;
    std::vector<std::complex<double>> diag_backward_;
    std::vector<std::complex<double>> off_backward_vec_;
    mutable std::vector<std::complex<double>> rhs_;
    mutable std::vector<std::complex<double>> workspace_;
};

/// Single Cayley step as a pure function (convenience over CayleyStepper).
WaveFunction step(const RodParameters& params, const WaveFunction& psi, double dt,
                  const PotentialSpec& potential);

/// Evolves the initial state to time t by repeated stepping, with a final
/// partial step landing exactly on t. dt must satisfy the
/// default_time_step bound.
WaveFunction evolve_numeric(const RodParameters& params, const GaussianState& state, double t,
                            const AngularGrid& grid, const PotentialSpec& potential, double dt);

/// P(sigma, t) samples recorded while hunting the density peak.
struct PeakTrace {
    std::vector<double> times;
    std::vector<double> values;
};

/// Tipping time from the grid evolution: records P(sigma, t) (linear
/// interpolation between bracketing nodes) on the stepping lattice and
/// returns the parabolic refinement of the first interior maximum.
///
/// The search stops once the peak is clearly passed or when t_max is
/// reached (t_max <= 0 picks the validity-window bound automatically).
/// Throws std::runtime_error if no interior maximum appears in the window.
double tipping_time_numeric(const RodParameters& params, const GaussianState& state,
                            const AngularGrid& grid, const PotentialSpec& potential, double dt,
                            double t_max = 0.0, PeakTrace* trace = nullptr);

/// <psi|H|psi> by the same discretization the stepper uses.
double energy_expectation(const RodParameters& params, const WaveFunction& psi,
                          const PotentialSpec& potential);

} // namespace qrod
