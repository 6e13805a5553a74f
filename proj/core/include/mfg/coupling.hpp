#pragma once

#include <vector>

#include "mfg/field.hpp"
#include "mfg/grid.hpp"
#include "mfg/model.hpp"
#include "mfg/params.hpp"

namespace mfg {

/// A self-consistent (u, m) pair with its coupling paths and iteration
/// diagnostics. Immutable once returned.
struct Solution {
    Field u;
    Field m;
    ScalarPath eta;
    ScalarPath Q;
    ScalarPath f;
    ScalarPath pbar; ///< NaN where eta < kEtaFloor
    int iterations = 0;
    std::vector<double> residual_history;
    double tau_final = 1.0;
    bool converged = false;
    Grid grid;
};

/// Damped fixed-point iteration on the scalar coupling paths (Q, eta).
///
/// Each pass freezes f = intercept_f(eta, Q), solves the backward HJB sweep
/// and the forward FP sweep (Hamiltonian, drift and data scaled by tau), and
/// recomputes the paths. The residual is the sup over time nodes of
/// |Q - Q_prev| + |eta - eta_prev| between consecutive recomputed paths; the
/// damped mix (1-theta)*old + theta*new feeds the next pass. Non-convergence
/// within picard_max returns the last iterate with converged = false.
Solution picard_solve(const ModelParams& params, const Discretization& disc,
                      const ScalarPath& q_init, double tau);

/// Runs picard_solve along disc.continuation, warm-starting each stage's
/// Q from the previous stage. Returns the first non-convergent stage's
/// Solution (tau_final < 1) or the tau = 1 Solution.
Solution continuation_solve(const ModelParams& params, const Discretization& disc);

/// Sup-norm gaps between two solves started from different Q paths.
struct UniquenessReport {
    double gap_u = 0.0;
    double gap_m = 0.0;
    double gap_q = 0.0;
    bool converged_a = false;
    bool converged_b = false;
};

UniquenessReport uniqueness_experiment(const ModelParams& params,
                                       const Discretization& disc,
                                       const ScalarPath& q_init_a,
                                       const ScalarPath& q_init_b);

} // namespace mfg
