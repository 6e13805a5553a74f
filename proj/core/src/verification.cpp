#include "mfg/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mfg/model.hpp"

namespace mfg {

ManufacturedCase manufactured_hjb(const ModelParams& params, const Grid& grid,
                                  TimeShape shape) {
    const double k = std::numbers::pi / (2.0 * grid.L);
    const double sigma2 = params.sigma * params.sigma;
    const double T = grid.T;

    auto g_of = [&](double t) {
        return shape == TimeShape::Linear ? (T - t) : (T - t) * (T - t) / T;
    };
    auto gprime_of = [&](double t) {
        return shape == TimeShape::Linear ? -1.0 : -2.0 * (T - t) / T;
    };

    ManufacturedCase mc;
    mc.exact = Field(grid.nt + 1, grid.nx + 1);
    mc.source = Field(grid.nt + 1, grid.nx + 1);
    mc.f.assign(grid.nt + 1, 1.0);

    for (std::size_t n = 0; n <= grid.nt; ++n) {
        const double gv = g_of(grid.t[n]);
        const double gp = gprime_of(grid.t[n]);
        for (std::size_t i = 0; i <= grid.nx; ++i) {
            const double s = std::sin(k * grid.x[i]);
            const double c = std::cos(k * grid.x[i]);
            const double u = gv * s;
            const double ut = gp * s;
            const double ux = gv * k * c;
            const double uxx = -gv * k * k * s;
            mc.exact(n, i) = u;
            mc.source(n, i) =
                -(ut + 0.5 * sigma2 * uxx - params.r * u + hamiltonian_H(1.0, ux));
        }
    }
    mc.terminal.assign(mc.exact.row(grid.nt).begin(), mc.exact.row(grid.nt).end());
    return mc;
}

Field fp_eigenfunction(const ModelParams& params, const Grid& grid) {
    const double k = std::numbers::pi / (2.0 * grid.L);
    const double lambda = 0.5 * params.sigma * params.sigma * k * k;
    Field m(grid.nt + 1, grid.nx + 1);
    for (std::size_t n = 0; n <= grid.nt; ++n) {
        const double decay = std::exp(-lambda * grid.t[n]);
        for (std::size_t i = 0; i <= grid.nx; ++i)
            m(n, i) = decay * std::sin(k * grid.x[i]);
    }
    return m;
}

double max_error(const Field& a, const Field& b) {
    double e = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        e = std::max(e, std::abs(a.data()[k] - b.data()[k]));
    return e;
}

} // namespace mfg
