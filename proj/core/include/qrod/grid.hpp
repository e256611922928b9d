#pragma once

#include <complex>
#include <vector>

#include "qrod/errors.hpp"

namespace qrod {

/// Uniform discretization of the interior of [-pi/2, pi/2] with implicit
/// Dirichlet zeros at both walls (the impenetrable floor). Nodes are
/// computed as signed multiples of the spacing so theta_j = -theta_{n-1-j}
/// holds bit-exactly.
struct AngularGrid {
    int n_points = 0;     ///< interior node count, >= 64
    double spacing = 0.0; ///< pi/(n_points + 1)

    /// Grid with n interior points. Throws DomainError for n < 64.
    static AngularGrid uniform(int n_points);

    double node(int j) const {
        return (static_cast<double>(j + 1) - 0.5 * static_cast<double>(n_points + 1)) * spacing;
    }

    std::vector<double> nodes() const;
};

/// Complex amplitudes sampled on an AngularGrid at one instant.
struct WaveFunction {
    AngularGrid grid;
    std::vector<std::complex<double>> amplitudes;
    double time = 0.0;

    /// Trapezoidal L2 norm over [-pi/2, pi/2]; the wall zeros make this
    /// spacing * sum(|psi_j|^2).
    double norm() const;

    double density(int j) const { return std::norm(amplitudes[static_cast<std::size_t>(j)]); }

    /// |psi|^2 at an off-node angle, linearly interpolated between the
    /// bracketing nodes (walls count as zero).
    double density_interpolated(double theta) const;

    double expectation_theta() const;
    double expectation_theta_sq() const;
};

} // namespace qrod
