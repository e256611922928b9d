#pragma once

#include <complex>
#include <span>

namespace qrod {

/// Thomas-algorithm solve of a complex tridiagonal system
///
///   lower[i-1] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i]
///
/// rhs is overwritten with the solution. workspace must hold at least
/// diag.size() elements. Throws SolverError when a forward-elimination
/// pivot falls below an absolute tolerance, reporting the row and the
/// pivot magnitude.
void solve_tridiagonal(std::span<const std::complex<double>> lower,
                       std::span<const std::complex<double>> diag,
                       std::span<const std::complex<double>> upper,
                       std::span<std::complex<double>> rhs,
                       std::span<std::complex<double>> workspace);

} // namespace qrod
