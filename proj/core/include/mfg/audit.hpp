#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mfg/coupling.hpp"
#include "mfg/params.hpp"

namespace mfg {

/// One invariant check: measured quantities, the tolerance it was judged
/// against, and a pass flag. `detail` names the offending node on failure.
struct CheckRecord {
    std::string name;
    std::vector<std::pair<std::string, double>> measured;
    double tolerance = 0.0;
    bool pass = true;
    std::string detail;
};

struct AuditReport {
    std::vector<CheckRecord> checks;
    bool overall_pass = true;
};

/// min m >= -1e-12, min u >= -tol_scheme and the discounted lower barrier
/// u >= e^{-rT} min uT - tol_scheme, where tol_scheme = 10 (dt + dx^2) |u|_inf.
CheckRecord check_positivity(const Solution& sol, const ModelParams& params);

/// eta(0) equals tau_final within 1e-10, eta nonincreasing within 1e-10 per
/// step, eta within [0,1].
CheckRecord check_mass(const Solution& sol, const ModelParams& params);

/// (a) the cross-multiplied integral identity residual, recorded together
/// with its first-order coefficient C_res = residual/(dt+dx); (b) the
/// explicit bound: integral of m u_x^2 <= (2+eps)(1+eps)T + 4(2+eps) max uT.
CheckRecord check_energy(const Solution& sol, const ModelParams& params);

/// Discrete u_x >= -tol_scheme everywhere, one-sided m_x(t,0) >= -1e-12,
/// one-sided u_xx(t,L) <= tol_scheme.
CheckRecord check_signs(const Solution& sol, const ModelParams& params);

/// Records max|Q|, max|f| and the sup residual of the boundary-flux identity
/// for d/dt of the discounted nonlocal term. Values are for refinement
/// comparison; the check itself requires them finite.
CheckRecord check_nonlocal(const Solution& sol, const ModelParams& params);

/// Records the discrete space-time integral of m_x^2/(m+1).
CheckRecord check_entropy(const Solution& sol, const ModelParams& params);

/// Records max over the grid of discrete u_x.
CheckRecord check_gradient_bound(const Solution& sol, const ModelParams& params);

/// Runs every check; overall_pass iff each individual check passes.
AuditReport audit_all(const Solution& sol, const ModelParams& params);

} // namespace mfg
