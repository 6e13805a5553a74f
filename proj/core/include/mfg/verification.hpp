#pragma once

#include "mfg/field.hpp"
#include "mfg/grid.hpp"
#include "mfg/params.hpp"

namespace mfg {

/// Closed-form case for solver verification: the exact field, the
/// compensating source (sampled at the target node of each step) and the
/// frozen coupling path used to build it.
struct ManufacturedCase {
    Field exact;
    Field source;
    ScalarPath f;
    std::vector<double> terminal;
};

/// Time profile of the manufactured value function g(t) * sin(pi x / (2L)).
/// Linear g(t) = T - t makes backward Euler exact in time, isolating the
/// spatial error; Quadratic g(t) = (T - t)^2 / T exposes the O(dt) error for
/// temporal-order measurements.
enum class TimeShape { Linear, Quadratic };

/// Manufactured solution of the Hamiltonian step equation with f = 1.
ManufacturedCase manufactured_hjb(const ModelParams& params, const Grid& grid,
                                  TimeShape shape);

/// Pure-diffusion eigenmode e^{-sigma^2 pi^2 t / (8 L^2)} sin(pi x / (2L)):
/// exact solution of the forward equation with zero drift, absorbing at
/// x = 0 and reflecting at x = L.
Field fp_eigenfunction(const ModelParams& params, const Grid& grid);

/// Max-norm difference between two equally shaped fields.
double max_error(const Field& a, const Field& b);

} // namespace mfg
