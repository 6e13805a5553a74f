#pragma once

#include <optional>

#include "mfg/field.hpp"
#include "mfg/grid.hpp"

namespace mfg {

/// Below this remaining mass the market price quotient is numerically
/// meaningless and is reported as absent. The demand intercept f stays
/// well defined all the way to eta = 0.
inline constexpr double kEtaFloor = 1e-10;

/// Demand coefficient a(eta) = 1/(1 + eps*eta), in (0,1].
/// Throws std::domain_error for eta outside [0,1].
double coeff_a(double eta, double epsilon);

/// Competition coefficient c(eta) = eps*eta/(1 + eps*eta) = 1 - a(eta).
double coeff_c(double eta, double epsilon);

/// Effective demand intercept f = a + c*pbar, computed in the singularity-free
/// form (2 + eps*Q) / (2 + eps*eta). Defined for all eta >= 0, including 0.
double intercept_f(double eta, double Q, double epsilon);

/// Market price pbar = (a(eta) + Q/eta) / (2 - c(eta)). Diagnostic only;
/// absent when eta < kEtaFloor.
std::optional<double> market_price(double eta, double Q, double epsilon);

/// H = (1/4)(f - ux)^2, the optimized running profit.
double hamiltonian_H(double f, double ux);

/// G = (1/2)(f - ux), the equilibrium extraction rate. H = G^2 exactly.
double drift_G(double f, double ux);

/// p* = (1/2)(f + ux), the equilibrium price. p* + G = f exactly.
double equilibrium_price(double f, double ux);

/// Per-time-node coupling paths of a field pair.
struct CouplingPaths {
    ScalarPath eta;  ///< trapezoid integral of m
    ScalarPath Q;    ///< trapezoid integral of u_x * m
    ScalarPath f;    ///< intercept_f(eta, Q)
    ScalarPath pbar; ///< market price; NaN where eta < kEtaFloor
};

CouplingPaths coupling_paths(const Field& u, const Field& m, const Grid& grid,
                             double epsilon);

} // namespace mfg
