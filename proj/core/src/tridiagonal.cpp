#include "qrod/tridiagonal.hpp"

#include <cmath>
#include <sstream>

#include "qrod/errors.hpp"

namespace qrod {

void solve_tridiagonal(std::span<const std::complex<double>> lower,
                       std::span<const std::complex<double>> diag,
                       std::span<const std::complex<double>> upper,
                       std::span<std::complex<double>> rhs,
                       std::span<std::complex<double>> workspace) {
    const std::size_t n = diag.size();
    if (lower.size() != n - 1 || upper.size() != n - 1 || rhs.size() != n ||
        workspace.size() < n) {
        throw std::invalid_argument("solve_tridiagonal: band/rhs/workspace size mismatch");
    }

    constexpr double kPivotTol = 1e-300;
    auto check_pivot = [](const std::complex<double>& pivot, std::size_t row) {
        const double mag = std::abs(pivot);
        if (!(mag > kPivotTol) || !std::isfinite(mag)) {
            std::ostringstream msg;
            msg << "solve_tridiagonal: pivot magnitude " << mag << " at row " << row
                << " below tolerance " << kPivotTol << " (system singular or ill-conditioned)";
            throw SolverError(msg.str(), row, mag);
        }
    };

    // forward elimination
    std::span<std::complex<double>> scratch = workspace.first(n);
    check_pivot(diag[0], 0);
    scratch[0] = upper[0] / diag[0];
    rhs[0] /= diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const std::complex<double> pivot = diag[i] - lower[i - 1] * scratch[i - 1];
        check_pivot(pivot, i);
        if (i < n - 1) scratch[i] = upper[i] / pivot;
        rhs[i] = (rhs[i] - lower[i - 1] * rhs[i - 1]) / pivot;
    }

    // back substitution
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] -= scratch[i] * rhs[i + 1];
    }
}

} // namespace qrod
