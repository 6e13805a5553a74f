#pragma once

#include <span>
#include <vector>

#include "mfg/field.hpp"
#include "mfg/grid.hpp"
#include "mfg/params.hpp"

namespace mfg {

/// One implicit finite-volume step of m_t - (sigma^2/2) m_xx - tau*(G m)_x = 0.
///
/// Interface fluxes F = -(sigma^2/2) m_x - tau*G m_upwind with upwinding by
/// the sign of the interface velocity -tau*G. The x = 0 row is absorbing
/// (m = 0); at x = L the outermost interface flux is identically zero, so the
/// discrete mass balance holds to machine precision. The implicit system is
/// an M-matrix for any dt and G, so nonnegativity of m is unconditional.
/// Roundoff negatives in (-1e-14, 0) are zeroed.
///
/// g_vec holds the nodal values of the unscaled drift G.
std::vector<double> fp_step(std::span<const double> m_curr,
                            std::span<const double> g_vec,
                            const ModelParams& params, const Grid& grid,
                            double tau = 1.0);

/// Forward sweep from tau * m0 (or the override, used as given). The step
/// into node n+1 uses the drift built from f[n+1] and the gradient of the
/// u-slice at node n+1.
Field solve_fp(const Field& u, const ScalarPath& f, const ModelParams& params,
               const Grid& grid, double tau = 1.0,
               const std::vector<double>* initial = nullptr);

/// Signed flux through the leftmost interior interface for the slice pair
/// (used by the mass audit): eta_{n+1} - eta_n = dt * boundary_flux exactly.
double fp_exit_flux(std::span<const double> m_new, std::span<const double> g_vec,
                    const ModelParams& params, const Grid& grid, double tau = 1.0);

} // namespace mfg
