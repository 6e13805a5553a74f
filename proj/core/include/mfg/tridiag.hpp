#pragma once

#include <span>
#include <vector>

namespace mfg {

/// Thomas algorithm for a tridiagonal system.
///
/// All spans have length n; lower[0] and upper[n-1] are unused. No pivoting:
/// callers are expected to assemble diagonally dominant systems. Throws
/// SolverError on a vanishing pivot.
std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs);

} // namespace mfg
