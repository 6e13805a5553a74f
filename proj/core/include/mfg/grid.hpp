#pragma once

#include <cstddef>
#include <vector>

namespace mfg {

/// Uniform tensor grid on [0,L] x [0,T].
///
/// Space nodes x_i = i*L/nx for i = 0..nx, time nodes t_n = n*T/nt for
/// n = 0..nt. The endpoint coordinates are exactly 0, L and 0, T.
struct Grid {
    std::size_t nx = 0; ///< number of space intervals
    std::size_t nt = 0; ///< number of time steps
    double dx = 0.0;
    double dt = 0.0;
    double L = 0.0;
    double T = 0.0;
    std::vector<double> x; ///< nx+1 space node coordinates
    std::vector<double> t; ///< nt+1 time node coordinates
};

/// Throws ConfigError for nonpositive L, T or nx < 4, nt < 2.
Grid build_grid(double L, double T, std::size_t nx, std::size_t nt);

} // namespace mfg
