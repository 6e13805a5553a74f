#include "mfg/tridiag.hpp"

#include <cassert>
#include <cmath>
#include <cstddef>

#include "mfg/errors.hpp"

namespace mfg {

std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs) {
    const std::size_t n = diag.size();
    assert(lower.size() == n && upper.size() == n && rhs.size() == n);
    assert(n >= 1);

    std::vector<double> c_star(n), d_star(n), x(n);

    if (diag[0] == 0.0) throw SolverError("tridiagonal solve: zero pivot at row 0");
    c_star[0] = upper[0] / diag[0];
    d_star[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double denom = diag[i] - lower[i] * c_star[i - 1];
        if (denom == 0.0 || !std::isfinite(denom))
            throw SolverError("tridiagonal solve: singular pivot at row " + std::to_string(i));
        c_star[i] = upper[i] / denom;
        d_star[i] = (rhs[i] - lower[i] * d_star[i - 1]) / denom;
    }
    x[n - 1] = d_star[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        x[i] = d_star[i] - c_star[i] * x[i + 1];
    return x;
}

} // namespace mfg
