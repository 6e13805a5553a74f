#include "mfg/grid.hpp"

#include <string>

#include "mfg/errors.hpp"

namespace mfg {

Grid build_grid(double L, double T, std::size_t nx, std::size_t nt) {
    if (!(L > 0.0)) throw ConfigError("grid: L must be positive, got " + std::to_string(L));
    if (!(T > 0.0)) throw ConfigError("grid: T must be positive, got " + std::to_string(T));
    if (nx < 4) throw ConfigError("grid: nx must be >= 4, got " + std::to_string(nx));
    if (nt < 2) throw ConfigError("grid: nt must be >= 2, got " + std::to_string(nt));

    Grid g;
    g.nx = nx;
    g.nt = nt;
    g.L = L;
    g.T = T;
    g.dx = L / static_cast<double>(nx);
    g.dt = T / static_cast<double>(nt);
    g.x.resize(nx + 1);
    g.t.resize(nt + 1);
    for (std::size_t i = 0; i <= nx; ++i)
        g.x[i] = static_cast<double>(i) * g.dx;
    g.x[nx] = L; // endpoint exact
    for (std::size_t n = 0; n <= nt; ++n)
        g.t[n] = static_cast<double>(n) * g.dt;
    g.t[nt] = T;
    return g;
}

} // namespace mfg
