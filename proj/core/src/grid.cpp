#include "qrod/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qrod {

AngularGrid AngularGrid::uniform(int n_points) {
    if (n_points < 64) {
        std::ostringstream msg;
        msg << "angular grid needs at least 64 interior points, got " << n_points;
        throw DomainError(msg.str());
    }
    return AngularGrid{n_points, std::numbers::pi / static_cast<double>(n_points + 1)};
}

std::vector<double> AngularGrid::nodes() const {
    std::vector<double> out(static_cast<std::size_t>(n_points));
    for (int j = 0; j < n_points; ++j) out[static_cast<std::size_t>(j)] = node(j);
    return out;
}

double WaveFunction::norm() const {
    double sum = 0.0;
    for (const auto& amp : amplitudes) sum += std::norm(amp);
    return std::sqrt(sum * grid.spacing);
}

double WaveFunction::density_interpolated(double theta) const {
    const double half_pi = std::numbers::pi / 2.0;
    if (std::abs(theta) >= half_pi) return 0.0;
    // fractional index relative to node(0) = -pi/2 + spacing
    const double pos = (theta + half_pi) / grid.spacing - 1.0;
    const auto lo = static_cast<long>(std::floor(pos));
    const double w = pos - static_cast<double>(lo);
    auto at = [&](long j) -> double {
        if (j < 0 || j >= grid.n_points) return 0.0;  // walls
        return std::norm(amplitudes[static_cast<std::size_t>(j)]);
    };
    return (1.0 - w) * at(lo) + w * at(lo + 1);
}

double WaveFunction::expectation_theta() const {
    double sum = 0.0;
    for (int j = 0; j < grid.n_points; ++j) {
        sum += grid.node(j) * std::norm(amplitudes[static_cast<std::size_t>(j)]);
    }
    return sum * grid.spacing;
}

double WaveFunction::expectation_theta_sq() const {
    double sum = 0.0;
    for (int j = 0; j < grid.n_points; ++j) {
        const double th = grid.node(j);
        sum += th * th * std::norm(amplitudes[static_cast<std::size_t>(j)]);
    }
    return sum * grid.spacing;
}

} // namespace qrod
