#include "mfg/coupling.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

#include "mfg/errors.hpp"
#include "mfg/fp.hpp"
#include "mfg/hjb.hpp"

namespace mfg {

Solution picard_solve(const ModelParams& params, const Discretization& disc,
                      const ScalarPath& q_init, double tau) {
    if (tau < 0.0 || tau > 1.0) throw ConfigError("picard: tau must lie in [0,1]");
    const Grid grid = build_grid(params, disc);
    if (q_init.size() != grid.nt + 1)
        throw ConfigError("picard: Q_init must have nt+1 entries");

    std::vector<double> m0 = initial_density(params, grid);
    std::vector<double> uT = terminal_value(params, grid);
    for (double& v : m0) v *= tau;
    for (double& v : uT) v *= tau;

    HjbOptions hjb_opts;
    hjb_opts.newton_tol = disc.newton_tol;
    hjb_opts.newton_max = disc.newton_max;
    hjb_opts.tau = tau;

    ScalarPath q = q_init;
    ScalarPath eta(grid.nt + 1, 1.0);
    ScalarPath q_prev = q;
    ScalarPath eta_prev = eta;
    ScalarPath f(grid.nt + 1);

    Solution sol;
    sol.grid = grid;
    sol.tau_final = tau;

    for (int iter = 1; iter <= disc.picard_max; ++iter) {
        for (std::size_t n = 0; n <= grid.nt; ++n)
            f[n] = intercept_f(std::clamp(eta[n], 0.0, 1.0), q[n], params.epsilon);

        Field u = solve_hjb(f, params, grid, hjb_opts, nullptr, &uT);
        Field m = solve_fp(u, f, params, grid, tau, &m0);
        CouplingPaths cp = coupling_paths(u, m, grid, params.epsilon);

        double residual = 0.0;
        for (std::size_t n = 0; n <= grid.nt; ++n)
            residual = std::max(residual, std::abs(cp.Q[n] - q_prev[n]) +
                                              std::abs(cp.eta[n] - eta_prev[n]));

        sol.residual_history.push_back(residual);
        sol.iterations = iter;
        sol.u = std::move(u);
        sol.m = std::move(m);
        sol.eta = cp.eta;
        sol.Q = cp.Q;
        sol.f = std::move(cp.f);
        sol.pbar = std::move(cp.pbar);

        q_prev = cp.Q;
        eta_prev = cp.eta;
        for (std::size_t n = 0; n <= grid.nt; ++n) {
            q[n] = (1.0 - disc.theta) * q[n] + disc.theta * cp.Q[n];
            eta[n] = (1.0 - disc.theta) * eta[n] + disc.theta * cp.eta[n];
        }

        if (residual <= disc.picard_tol) {
            sol.converged = true;
            break;
        }
    }
    return sol;
}

Solution continuation_solve(const ModelParams& params, const Discretization& disc) {
    validate(disc);
    const Grid grid = build_grid(params, disc);
    ScalarPath q(grid.nt + 1, 0.0);
    Solution sol;
    for (double tau : disc.continuation) {
        sol = picard_solve(params, disc, q, tau);
        if (!sol.converged) return sol;
        q = sol.Q;
    }
    return sol;
}

UniquenessReport uniqueness_experiment(const ModelParams& params,
                                       const Discretization& disc,
                                       const ScalarPath& q_init_a,
                                       const ScalarPath& q_init_b) {
    const Solution a = picard_solve(params, disc, q_init_a, 1.0);
    const Solution b = picard_solve(params, disc, q_init_b, 1.0);

    UniquenessReport rep;
    rep.converged_a = a.converged;
    rep.converged_b = b.converged;
    for (std::size_t k = 0; k < a.u.data().size(); ++k) {
        rep.gap_u = std::max(rep.gap_u, std::abs(a.u.data()[k] - b.u.data()[k]));
        rep.gap_m = std::max(rep.gap_m, std::abs(a.m.data()[k] - b.m.data()[k]));
    }
    for (std::size_t n = 0; n < a.Q.size(); ++n)
        rep.gap_q = std::max(rep.gap_q, std::abs(a.Q[n] - b.Q[n]));
    return rep;
}

} // namespace mfg
