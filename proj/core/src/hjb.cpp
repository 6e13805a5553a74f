#include "mfg/hjb.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <string>

#include "mfg/errors.hpp"
#include "mfg/tridiag.hpp"

namespace mfg {

namespace {

enum class Stencil : std::uint8_t { Central, Backward, Forward };

Stencil pick_stencil(HjbGradient mode, double drift, double dx, double sigma2) {
    switch (mode) {
    case HjbGradient::Central: return Stencil::Central;
    case HjbGradient::Backward: return Stencil::Backward;
    case HjbGradient::Forward: return Stencil::Forward;
    case HjbGradient::Hybrid:
        if (std::abs(drift) * dx <= sigma2) return Stencil::Central;
        return drift > 0.0 ? Stencil::Backward : Stencil::Forward;
    }
    return Stencil::Central;
}

double grad_at(const std::vector<double>& u, std::size_t i, Stencil st, double dx) {
    switch (st) {
    case Stencil::Central: return (u[i + 1] - u[i - 1]) / (2.0 * dx);
    case Stencil::Backward: return (u[i] - u[i - 1]) / dx;
    case Stencil::Forward: return (u[i + 1] - u[i]) / dx;
    }
    return 0.0;
}

} // namespace

std::vector<double> hjb_step(std::span<const double> u_next, double f_n,
                             const ModelParams& params, const Grid& grid,
                             std::span<const double> source,
                             const HjbOptions& opts) {
    const std::size_t nx = grid.nx;
    assert(u_next.size() == nx + 1);
    assert(source.empty() || source.size() == nx + 1);

    const double dx = grid.dx;
    const double dt = grid.dt;
    const double sigma2 = params.sigma * params.sigma;
    const double half_diff = 0.5 * sigma2 / (dx * dx);
    const double tau = opts.tau;

    std::vector<double> u(u_next.begin(), u_next.end());
    u[0] = 0.0;

    std::vector<Stencil> st(nx + 1, Stencil::Central);
    std::vector<double> resid(nx + 1);

    // Residual of the implicit step equation; stencils are re-selected from
    // the iterate so residual and Jacobian stay consistent.
    auto evaluate = [&](const std::vector<double>& v, std::vector<double>& R,
                        std::vector<Stencil>& stencils) -> double {
        R[0] = v[0];
        for (std::size_t i = 1; i < nx; ++i) {
            const double pc = (v[i + 1] - v[i - 1]) / (2.0 * dx);
            const double drift = tau * 0.5 * (f_n - pc);
            stencils[i] = pick_stencil(opts.gradient, drift, dx, sigma2);
            const double p = grad_at(v, i, stencils[i], dx);
            const double q = f_n - p;
            R[i] = (u_next[i] - v[i]) / dt +
                   half_diff * (v[i - 1] - 2.0 * v[i] + v[i + 1]) - params.r * v[i] +
                   tau * 0.25 * q * q;
            if (!source.empty()) R[i] += source[i];
        }
        // x = L row: ghost reflection u_{nx+1} = u_{nx-1}, gradient 0.
        R[nx] = (u_next[nx] - v[nx]) / dt +
                2.0 * half_diff * (v[nx - 1] - v[nx]) - params.r * v[nx] +
                tau * 0.25 * f_n * f_n;
        if (!source.empty()) R[nx] += source[nx];
        double norm = 0.0;
        for (double ri : R) norm = std::max(norm, std::abs(ri));
        return norm;
    };

    double norm = evaluate(u, resid, st);

    std::vector<double> lower(nx + 1), diag(nx + 1), upper(nx + 1), rhs(nx + 1);
    std::vector<double> trial(nx + 1), trial_resid(nx + 1);
    std::vector<Stencil> trial_st(nx + 1);

    for (int iter = 0; iter < opts.newton_max; ++iter) {
        // Tridiagonal Jacobian with the stencils frozen at the iterate.
        lower[0] = 0.0;
        diag[0] = 1.0;
        upper[0] = 0.0;
        rhs[0] = -resid[0];
        for (std::size_t i = 1; i < nx; ++i) {
            const double p = grad_at(u, i, st[i], dx);
            const double g = 0.5 * (f_n - p);
            double dpl = 0.0, dpd = 0.0, dpu = 0.0;
            switch (st[i]) {
            case Stencil::Central:
                dpl = -1.0 / (2.0 * dx);
                dpu = 1.0 / (2.0 * dx);
                break;
            case Stencil::Backward:
                dpd = 1.0 / dx;
                dpl = -1.0 / dx;
                break;
            case Stencil::Forward:
                dpu = 1.0 / dx;
                dpd = -1.0 / dx;
                break;
            }
            lower[i] = half_diff - tau * g * dpl;
            diag[i] = -1.0 / dt - 2.0 * half_diff - params.r - tau * g * dpd;
            upper[i] = half_diff - tau * g * dpu;
            rhs[i] = -resid[i];
        }
        lower[nx] = 2.0 * half_diff;
        diag[nx] = -1.0 / dt - 2.0 * half_diff - params.r;
        upper[nx] = 0.0;
        rhs[nx] = -resid[nx];

        const std::vector<double> delta = solve_tridiagonal(lower, diag, upper, rhs);
        double step_norm = 0.0;
        for (double d : delta) step_norm = std::max(step_norm, std::abs(d));

        if (step_norm <= opts.newton_tol) {
            for (std::size_t i = 0; i <= nx; ++i) u[i] += delta[i];
            u[0] = 0.0;
            return u;
        }

        double alpha = 1.0;
        int halvings = 0;
        double trial_norm;
        for (;;) {
            for (std::size_t i = 0; i <= nx; ++i) trial[i] = u[i] + alpha * delta[i];
            trial_norm = evaluate(trial, trial_resid, trial_st);
            if (trial_norm < norm || halvings >= 30) break;
            alpha *= 0.5;
            ++halvings;
        }
        u.swap(trial);
        resid.swap(trial_resid);
        st.swap(trial_st);
        norm = trial_norm;
    }
    throw SolverError("hjb step: Newton failed to reach tolerance, residual = " +
                          std::to_string(norm),
                      norm);
}

Field solve_hjb(const ScalarPath& f, const ModelParams& params, const Grid& grid,
                const HjbOptions& opts, const Field* source,
                const std::vector<double>* terminal) {
    assert(f.size() == grid.nt + 1);

    Field u(grid.nt + 1, grid.nx + 1);
    std::vector<double> final_slice;
    if (terminal) {
        final_slice = *terminal;
    } else {
        final_slice = terminal_value(params, grid);
        for (double& v : final_slice) v *= opts.tau;
    }
    assert(final_slice.size() == grid.nx + 1);
    std::copy(final_slice.begin(), final_slice.end(), u.row(grid.nt).begin());
    u(grid.nt, 0) = 0.0;

    for (std::size_t n = grid.nt; n-- > 0;) {
        std::span<const double> src;
        if (source) src = source->row(n);
        try {
            const std::vector<double> slice =
                hjb_step(u.row(n + 1), f[n], params, grid, src, opts);
            std::copy(slice.begin(), slice.end(), u.row(n).begin());
        } catch (const SolverError& e) {
            throw SolverError("hjb sweep at time node " + std::to_string(n) + ": " +
                                  e.what(),
                              e.residual(), static_cast<long>(n));
        }
    }
    return u;
}

} // namespace mfg
