#include "mfg/fp.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "mfg/calculus.hpp"
#include "mfg/errors.hpp"
#include "mfg/model.hpp"
#include "mfg/tridiag.hpp"

namespace mfg {

namespace {

constexpr double kClipThreshold = 1e-14;

// Interface flux F_j = a_j * m_j + b_j * m_{j+1} between nodes j and j+1.
struct FluxCoeffs {
    double a;
    double b;
};

FluxCoeffs interface_flux(double g_left, double g_right, double sigma2, double dx,
                          double tau) {
    const double v = -tau * 0.5 * (g_left + g_right); // divergence-form velocity
    const double dcoef = 0.5 * sigma2 / dx;
    return {dcoef + std::max(v, 0.0), -dcoef + std::min(v, 0.0)};
}

} // namespace

std::vector<double> fp_step(std::span<const double> m_curr,
                            std::span<const double> g_vec,
                            const ModelParams& params, const Grid& grid,
                            double tau) {
    const std::size_t nx = grid.nx;
    assert(m_curr.size() == nx + 1 && g_vec.size() == nx + 1);

    const double dx = grid.dx;
    const double dt = grid.dt;
    const double sigma2 = params.sigma * params.sigma;

    std::vector<FluxCoeffs> flux(nx); // interface j between nodes j, j+1
    for (std::size_t j = 0; j < nx; ++j)
        flux[j] = interface_flux(g_vec[j], g_vec[j + 1], sigma2, dx, tau);

    std::vector<double> lower(nx + 1), diag(nx + 1), upper(nx + 1), rhs(nx + 1);

    lower[0] = 0.0;
    diag[0] = 1.0;
    upper[0] = 0.0;
    rhs[0] = 0.0; // absorbing boundary
    for (std::size_t i = 1; i < nx; ++i) {
        lower[i] = -flux[i - 1].a;
        diag[i] = dx / dt + flux[i].a - flux[i - 1].b;
        upper[i] = flux[i].b;
        rhs[i] = dx / dt * m_curr[i];
    }
    // x = L: half cell, outer interface flux identically zero.
    lower[nx] = -flux[nx - 1].a;
    diag[nx] = 0.5 * dx / dt - flux[nx - 1].b;
    upper[nx] = 0.0;
    rhs[nx] = 0.5 * dx / dt * m_curr[nx];

    std::vector<double> m_new = solve_tridiagonal(lower, diag, upper, rhs);
    for (double& v : m_new)
        if (v > -kClipThreshold && v < 0.0) v = 0.0;
    return m_new;
}

double fp_exit_flux(std::span<const double> m_new, std::span<const double> g_vec,
                    const ModelParams& params, const Grid& grid, double tau) {
    const FluxCoeffs f0 =
        interface_flux(g_vec[0], g_vec[1], params.sigma * params.sigma, grid.dx, tau);
    return f0.a * m_new[0] + f0.b * m_new[1];
}

Field solve_fp(const Field& u, const ScalarPath& f, const ModelParams& params,
               const Grid& grid, double tau, const std::vector<double>* initial) {
    assert(u.rows() == grid.nt + 1 && u.cols() == grid.nx + 1);
    assert(f.size() == grid.nt + 1);

    Field m(grid.nt + 1, grid.nx + 1);
    std::vector<double> first;
    if (initial) {
        first = *initial;
    } else {
        first = initial_density(params, grid);
        for (double& v : first) v *= tau;
    }
    assert(first.size() == grid.nx + 1);
    std::copy(first.begin(), first.end(), m.row(0).begin());

    std::vector<double> g_vec(grid.nx + 1);
    for (std::size_t n = 0; n < grid.nt; ++n) {
        const std::vector<double> ux = gradient(u.row(n + 1), grid.dx);
        for (std::size_t i = 0; i <= grid.nx; ++i)
            g_vec[i] = drift_G(f[n + 1], ux[i]);
        try {
            const std::vector<double> slice = fp_step(m.row(n), g_vec, params, grid, tau);
            std::copy(slice.begin(), slice.end(), m.row(n + 1).begin());
        } catch (const SolverError& e) {
            throw SolverError("fp sweep at time node " + std::to_string(n + 1) + ": " +
                                  e.what(),
                              e.residual(), static_cast<long>(n + 1));
        }
    }
    return m;
}

} // namespace mfg
