#pragma once

#include <span>
#include <vector>

#include "mfg/field.hpp"
#include "mfg/grid.hpp"
#include "mfg/params.hpp"

namespace mfg {

/// Spatial stencil used for the gradient inside the Hamiltonian.
///
/// Hybrid keeps the scheme monotone on every grid: a node uses the
/// second-order central difference while |G| dx <= sigma^2 (the implicit
/// system is then an M-matrix) and falls back to first-order upwinding by
/// the sign of the local drift otherwise. The forced modes exist for tests.
enum class HjbGradient { Hybrid, Central, Backward, Forward };

struct HjbOptions {
    double newton_tol = 1e-11;
    int newton_max = 50;
    double tau = 1.0; ///< continuation scaling of the Hamiltonian
    HjbGradient gradient = HjbGradient::Hybrid;
};

/// One backward-Euler step of u_t + (sigma^2/2) u_xx - r u + tau*H(f,u_x) + s = 0
/// from the later slice u_next to the earlier time node, with u(0) = 0
/// (Dirichlet) and u_x(L) = 0 via second-order ghost reflection. The
/// nonlinear step is solved by damped Newton iterations, each a tridiagonal
/// solve. Throws SolverError carrying the residual if Newton fails to reach
/// newton_tol within newton_max iterations.
std::vector<double> hjb_step(std::span<const double> u_next, double f_n,
                             const ModelParams& params, const Grid& grid,
                             std::span<const double> source = {},
                             const HjbOptions& opts = {});

/// Full backward sweep: final slice is tau * uT (or the override), earlier
/// slices by repeated hjb_step with f sampled at the target (earlier) node.
/// An optional source field supplies a per-node forcing, sampled at the
/// target node of each step (manufactured-solution tests).
Field solve_hjb(const ScalarPath& f, const ModelParams& params, const Grid& grid,
                const HjbOptions& opts = {}, const Field* source = nullptr,
                const std::vector<double>* terminal = nullptr);

} // namespace mfg
