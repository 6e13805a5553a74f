#include "mfg/model.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>

#include "mfg/calculus.hpp"

namespace mfg {

namespace {

void require_eta_in_unit_interval(double eta) {
    if (eta < 0.0 || eta > 1.0)
        throw std::domain_error("eta must lie in [0,1], got " + std::to_string(eta));
}

} // namespace

double coeff_a(double eta, double epsilon) {
    require_eta_in_unit_interval(eta);
    return 1.0 / (1.0 + epsilon * eta);
}

double coeff_c(double eta, double epsilon) {
    require_eta_in_unit_interval(eta);
    const double ee = epsilon * eta;
    return ee / (1.0 + ee);
}

double intercept_f(double eta, double Q, double epsilon) {
    return (2.0 + epsilon * Q) / (2.0 + epsilon * eta);
}

std::optional<double> market_price(double eta, double Q, double epsilon) {
    if (eta < kEtaFloor) return std::nullopt;
    return (coeff_a(eta, epsilon) + Q / eta) / (2.0 - coeff_c(eta, epsilon));
}

double hamiltonian_H(double f, double ux) {
    const double q = 0.5 * (f - ux);
    return q * q;
}

double drift_G(double f, double ux) { return 0.5 * (f - ux); }

double equilibrium_price(double f, double ux) { return 0.5 * (f + ux); }

CouplingPaths coupling_paths(const Field& u, const Field& m, const Grid& grid,
                             double epsilon) {
    assert(u.rows() == grid.nt + 1 && u.cols() == grid.nx + 1);
    assert(m.rows() == u.rows() && m.cols() == u.cols());

    CouplingPaths cp;
    cp.eta.resize(grid.nt + 1);
    cp.Q.resize(grid.nt + 1);
    cp.f.resize(grid.nt + 1);
    cp.pbar.resize(grid.nt + 1);

    std::vector<double> integrand(grid.nx + 1);
    for (std::size_t n = 0; n <= grid.nt; ++n) {
        const auto mrow = m.row(n);
        const std::vector<double> ux = gradient(u.row(n), grid.dx);
        for (std::size_t i = 0; i <= grid.nx; ++i)
            integrand[i] = ux[i] * mrow[i];
        cp.eta[n] = trapezoid(mrow, grid.dx);
        cp.Q[n] = trapezoid(integrand, grid.dx);
        cp.f[n] = intercept_f(cp.eta[n], cp.Q[n], epsilon);
        const auto pbar = market_price(std::clamp(cp.eta[n], 0.0, 1.0), cp.Q[n], epsilon);
        cp.pbar[n] = pbar ? *pbar : std::numeric_limits<double>::quiet_NaN();
    }
    return cp;
}

} // namespace mfg
