#include "mfg/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mfg/calculus.hpp"
#include "mfg/model.hpp"

namespace mfg {

namespace {

double max_abs(const Field& f) {
    double s = 0.0;
    for (double v : f.data()) s = std::max(s, std::abs(v));
    return s;
}

// Trapezoid-in-time of per-slice space integrals.
double time_integral(const std::vector<double>& per_slice, double dt) {
    return trapezoid(per_slice, dt);
}

std::vector<std::vector<double>> gradients_by_row(const Field& f, const Grid& g) {
    std::vector<std::vector<double>> out(g.nt + 1);
    for (std::size_t n = 0; n <= g.nt; ++n)
        out[n] = gradient(f.row(n), g.dx);
    return out;
}

double scheme_tolerance(const Grid& g, double scale) {
    return 10.0 * (g.dt + g.dx * g.dx) * scale;
}

} // namespace

CheckRecord check_positivity(const Solution& sol, const ModelParams& params) {
    CheckRecord rec;
    rec.name = "positivity";
    const Grid& g = sol.grid;

    double min_m = std::numeric_limits<double>::infinity();
    double min_u = std::numeric_limits<double>::infinity();
    std::size_t worst_m = 0;
    for (std::size_t k = 0; k < sol.m.data().size(); ++k) {
        if (sol.m.data()[k] < min_m) {
            min_m = sol.m.data()[k];
            worst_m = k;
        }
        min_u = std::min(min_u, sol.u.data()[k]);
    }
    const double tol_u = scheme_tolerance(g, max_abs(sol.u));
    double min_uT = std::numeric_limits<double>::infinity();
    for (double v : sol.u.row(g.nt)) min_uT = std::min(min_uT, v);
    const double barrier = std::exp(-params.r * params.T) * min_uT - tol_u;

    rec.measured = {{"min_m", min_m},
                    {"min_u", min_u},
                    {"discounted_terminal_barrier", barrier}};
    rec.tolerance = tol_u;
    rec.pass = min_m >= -1e-12 && min_u >= -tol_u && min_u >= barrier;
    if (min_m < -1e-12)
        rec.detail = "m negative at time node " +
                     std::to_string(worst_m / sol.m.cols()) + ", space node " +
                     std::to_string(worst_m % sol.m.cols());
    return rec;
}

CheckRecord check_mass(const Solution& sol, const ModelParams&) {
    CheckRecord rec;
    rec.name = "mass";
    rec.tolerance = 1e-10;

    const double eta0_error = std::abs(sol.eta.front() - sol.tau_final);
    double worst_increase = 0.0;
    std::size_t worst_node = 0;
    double eta_min = sol.eta.front(), eta_max = sol.eta.front();
    for (std::size_t n = 0; n + 1 < sol.eta.size(); ++n) {
        const double inc = sol.eta[n + 1] - sol.eta[n];
        if (inc > worst_increase) {
            worst_increase = inc;
            worst_node = n + 1;
        }
        eta_min = std::min(eta_min, sol.eta[n + 1]);
        eta_max = std::max(eta_max, sol.eta[n + 1]);
    }
    rec.measured = {{"eta0_error", eta0_error},
                    {"max_eta_increase", worst_increase},
                    {"eta_min", eta_min},
                    {"eta_max", eta_max}};
    rec.pass = eta0_error <= 1e-10 && worst_increase <= 1e-10 && eta_min >= -1e-10 &&
               eta_max <= 1.0 + 1e-10;
    if (worst_increase > 1e-10)
        rec.detail = "eta increases at time node " + std::to_string(worst_node);
    return rec;
}

CheckRecord check_energy(const Solution& sol, const ModelParams& params) {
    CheckRecord rec;
    rec.name = "energy";
    const Grid& g = sol.grid;
    const double tau = sol.tau_final;
    const auto ux = gradients_by_row(sol.u, g);

    std::vector<double> um(g.nt + 1), mH(g.nt + 1), muxG(g.nt + 1), mux2(g.nt + 1);
    std::vector<double> row(g.nx + 1);
    for (std::size_t n = 0; n <= g.nt; ++n) {
        const auto mrow = sol.m.row(n);
        const auto urow = sol.u.row(n);
        for (std::size_t i = 0; i <= g.nx; ++i) row[i] = urow[i] * mrow[i];
        um[n] = trapezoid(row, g.dx);
        for (std::size_t i = 0; i <= g.nx; ++i)
            row[i] = mrow[i] * hamiltonian_H(sol.f[n], ux[n][i]);
        mH[n] = trapezoid(row, g.dx);
        for (std::size_t i = 0; i <= g.nx; ++i)
            row[i] = mrow[i] * ux[n][i] * drift_G(sol.f[n], ux[n][i]);
        muxG[n] = trapezoid(row, g.dx);
        for (std::size_t i = 0; i <= g.nx; ++i)
            row[i] = mrow[i] * ux[n][i] * ux[n][i];
        mux2[n] = trapezoid(row, g.dx);
    }

    const auto uT_row = sol.u.row(g.nt);
    const auto mT_row = sol.m.row(g.nt);
    const auto u0_row = sol.u.row(0);
    const auto m0_row = sol.m.row(0);
    for (std::size_t i = 0; i <= g.nx; ++i) row[i] = uT_row[i] * mT_row[i];
    const double terminal_pairing = trapezoid(row, g.dx);
    for (std::size_t i = 0; i <= g.nx; ++i) row[i] = u0_row[i] * m0_row[i];
    const double initial_pairing = trapezoid(row, g.dx);

    const double residual =
        std::abs(terminal_pairing - initial_pairing - params.r * time_integral(um, g.dt) +
                 tau * time_integral(mH, g.dt) + tau * time_integral(muxG, g.dt));
    const double c_res = residual / (g.dt + g.dx);

    double max_uT = 0.0;
    for (double v : uT_row) max_uT = std::max(max_uT, v);
    const double energy = time_integral(mux2, g.dt);
    const double bound = (2.0 + params.epsilon) * (1.0 + params.epsilon) * params.T +
                         4.0 * (2.0 + params.epsilon) * max_uT;

    rec.measured = {{"identity_residual", residual},
                    {"identity_c_res", c_res},
                    {"m_ux2_integral", energy},
                    {"explicit_bound", bound}};
    rec.tolerance = g.dt + g.dx;
    rec.pass = std::isfinite(residual) && energy <= bound;
    if (energy > bound) rec.detail = "explicit energy bound violated";
    return rec;
}

CheckRecord check_signs(const Solution& sol, const ModelParams&) {
    CheckRecord rec;
    rec.name = "signs";
    const Grid& g = sol.grid;
    const auto ux = gradients_by_row(sol.u, g);

    double min_ux = std::numeric_limits<double>::infinity();
    double ux_scale = 0.0;
    for (const auto& rowg : ux)
        for (double v : rowg) {
            min_ux = std::min(min_ux, v);
            ux_scale = std::max(ux_scale, std::abs(v));
        }

    double min_mx0 = std::numeric_limits<double>::infinity();
    double max_uxxL = -std::numeric_limits<double>::infinity();
    double uxx_scale = 0.0;
    std::size_t worst_mx0_node = 0;
    for (std::size_t n = 0; n <= g.nt; ++n) {
        const double mx0 = left_derivative(sol.m.row(n), g.dx);
        if (mx0 < min_mx0) {
            min_mx0 = mx0;
            worst_mx0_node = n;
        }
        const double uxxL = right_second_derivative(sol.u.row(n), g.dx);
        max_uxxL = std::max(max_uxxL, uxxL);
        const auto urow = sol.u.row(n);
        for (std::size_t i = 1; i < g.nx; ++i)
            uxx_scale = std::max(uxx_scale,
                                 std::abs(urow[i - 1] - 2.0 * urow[i] + urow[i + 1]) /
                                     (g.dx * g.dx));
    }

    const double tol_ux = scheme_tolerance(g, ux_scale);
    const double tol_uxx = scheme_tolerance(g, uxx_scale);
    rec.measured = {{"min_ux", min_ux},
                    {"tol_ux", tol_ux},
                    {"min_mx0", min_mx0},
                    {"max_uxxL", max_uxxL},
                    {"tol_uxx", tol_uxx}};
    rec.tolerance = tol_ux;
    rec.pass = min_ux >= -tol_ux && min_mx0 >= -1e-12 && max_uxxL <= tol_uxx;
    if (min_mx0 < -1e-12)
        rec.detail = "m_x(t,0) negative at time node " + std::to_string(worst_mx0_node);
    return rec;
}

CheckRecord check_nonlocal(const Solution& sol, const ModelParams& params) {
    CheckRecord rec;
    rec.name = "nonlocal";
    const Grid& g = sol.grid;
    const double sigma2 = params.sigma * params.sigma;

    double max_q = 0.0, max_f = 0.0;
    for (std::size_t n = 0; n <= g.nt; ++n) {
        max_q = std::max(max_q, std::abs(sol.Q[n]));
        max_f = std::max(max_f, std::abs(sol.f[n]));
    }

    // Boundary-flux identity for the discounted nonlocal term, evaluated at
    // half time steps against the averaged boundary terms.
    std::vector<double> boundary_rhs(g.nt + 1);
    for (std::size_t n = 0; n <= g.nt; ++n) {
        const double ux0 = left_derivative(sol.u.row(n), g.dx);
        const double mx0 = left_derivative(sol.m.row(n), g.dx);
        const double uxxL = right_second_derivative(sol.u.row(n), g.dx);
        const double mL = sol.m(n, g.nx);
        boundary_rhs[n] =
            std::exp(-params.r * g.t[n]) * (-0.5 * sigma2) * (ux0 * mx0 + uxxL * mL);
    }
    // The pointwise residual has a t^(-1/2) layer at t = 0 (the initial data
    // are not compatible with the identity's corner), so the time-integrated
    // residual is the convergent measure; the sup is kept as a diagnostic.
    double residual_l1 = 0.0, residual_sup = 0.0;
    for (std::size_t n = 0; n < g.nt; ++n) {
        const double lhs = (std::exp(-params.r * g.t[n + 1]) * sol.Q[n + 1] -
                            std::exp(-params.r * g.t[n]) * sol.Q[n]) /
                           g.dt;
        const double rhs = 0.5 * (boundary_rhs[n] + boundary_rhs[n + 1]);
        residual_l1 += g.dt * std::abs(lhs - rhs);
        residual_sup = std::max(residual_sup, std::abs(lhs - rhs));
    }

    rec.measured = {{"max_Q", max_q},
                    {"max_f", max_f},
                    {"flux_identity_residual", residual_l1},
                    {"flux_identity_sup", residual_sup}};
    rec.tolerance = g.dt + g.dx;
    rec.pass = std::isfinite(max_q) && std::isfinite(max_f) && std::isfinite(residual_l1);
    return rec;
}

CheckRecord check_entropy(const Solution& sol, const ModelParams&) {
    CheckRecord rec;
    rec.name = "entropy";
    const Grid& g = sol.grid;
    std::vector<double> per_slice(g.nt + 1);
    std::vector<double> row(g.nx + 1);
    for (std::size_t n = 0; n <= g.nt; ++n) {
        const std::vector<double> mx = gradient(sol.m.row(n), g.dx);
        const auto mrow = sol.m.row(n);
        for (std::size_t i = 0; i <= g.nx; ++i)
            row[i] = mx[i] * mx[i] / (mrow[i] + 1.0);
        per_slice[n] = trapezoid(row, g.dx);
    }
    const double value = time_integral(per_slice, g.dt);
    rec.measured = {{"mx2_over_m_plus_1", value}};
    rec.pass = std::isfinite(value);
    return rec;
}

CheckRecord check_gradient_bound(const Solution& sol, const ModelParams&) {
    CheckRecord rec;
    rec.name = "gradient_bound";
    const Grid& g = sol.grid;
    double max_ux = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= g.nt; ++n)
        for (double v : gradient(sol.u.row(n), g.dx))
            max_ux = std::max(max_ux, v);
    rec.measured = {{"max_ux", max_ux}};
    rec.pass = std::isfinite(max_ux);
    return rec;
}

AuditReport audit_all(const Solution& sol, const ModelParams& params) {
    AuditReport report;
    report.checks.push_back(check_positivity(sol, params));
    report.checks.push_back(check_mass(sol, params));
    report.checks.push_back(check_energy(sol, params));
    report.checks.push_back(check_signs(sol, params));
    report.checks.push_back(check_nonlocal(sol, params));
    report.checks.push_back(check_entropy(sol, params));
    report.checks.push_back(check_gradient_bound(sol, params));
    report.overall_pass = true;
    for (const auto& c : report.checks) report.overall_pass = report.overall_pass && c.pass;
    return report;
}

} // namespace mfg
